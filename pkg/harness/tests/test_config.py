import pytest

from banglasent_harness import BATCH_SIZES, LR_MAX, LR_MIN, TrainConfig, sample_trials


class TestTrainConfig:
    def test_grid_max_learning_rate_accepted(self):
        TrainConfig(learning_rate=1e-3)

    def test_grid_min_learning_rate_accepted(self):
        TrainConfig(learning_rate=1e-5)

    def test_learning_rate_above_grid_rejected(self):
        with pytest.raises(ValueError, match="outside grid"):
            TrainConfig(learning_rate=2e-3)

    def test_learning_rate_below_grid_rejected(self):
        with pytest.raises(ValueError, match="outside grid"):
            TrainConfig(learning_rate=5e-6)

    def test_batch_size_must_be_in_grid(self):
        for batch in BATCH_SIZES:
            TrainConfig(batch_size=batch)
        with pytest.raises(ValueError, match="batch_size"):
            TrainConfig(batch_size=12)

    def test_epochs_default_three_and_minimum(self):
        assert TrainConfig().epochs == 3
        with pytest.raises(ValueError):
            TrainConfig(epochs=0)

    def test_trial_count_default_ten(self):
        assert TrainConfig().trial_count == 10


class TestSampling:
    def test_same_seed_same_trials(self):
        config = TrainConfig(trial_count=10, seed=7)
        assert sample_trials(config) == sample_trials(config)

    def test_different_seed_different_trials(self):
        a = sample_trials(TrainConfig(trial_count=10, seed=1))
        b = sample_trials(TrainConfig(trial_count=10, seed=2))
        assert a != b

    def test_samples_stay_inside_grid(self):
        for lr, batch in sample_trials(TrainConfig(trial_count=200, seed=3)):
            assert LR_MIN <= lr <= LR_MAX
            assert batch in BATCH_SIZES

    def test_fixed_values_pass_through(self):
        trials = sample_trials(TrainConfig(learning_rate=1e-4, batch_size=16, trial_count=5))
        assert trials == [(1e-4, 16)] * 5
