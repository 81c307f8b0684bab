import math

import pytest

from noma_aloha import (
    ConfigError,
    SystemConfig,
    build_power_ladder,
    gamma_db_to_linear,
    validate_config,
)


def test_db_identity():
    assert gamma_db_to_linear(0.0) == 1.0


def test_db_4db():
    assert gamma_db_to_linear(4.0) == pytest.approx(2.51189, abs=1e-5)


def test_db_round_trip():
    assert gamma_db_to_linear(10.0 * math.log10(2.0)) == pytest.approx(2.0, rel=1e-12)


@pytest.mark.parametrize("bad", [float("inf"), float("nan"), float("-inf")])
def test_db_rejects_non_finite(bad):
    with pytest.raises(ConfigError):
        gamma_db_to_linear(bad)


def test_ladder_worked_example():
    assert build_power_ladder(2.0, 4).levels == (54.0, 18.0, 6.0, 2.0)


def test_ladder_single_level_is_gamma():
    assert build_power_ladder(2.0, 1).levels == (2.0,)


def test_ladder_4db_two_levels():
    v1, v2 = build_power_ladder(2.51189, 2).levels
    assert v1 == pytest.approx(8.8219, abs=1e-3)
    assert v2 == pytest.approx(2.5119, abs=1e-3)


@pytest.mark.parametrize("gamma,q", [(0.0, 4), (-1.0, 4), (2.0, 0), (2.0, 41)])
def test_ladder_rejects(gamma, q):
    with pytest.raises(ConfigError):
        build_power_ladder(gamma, q)


@pytest.mark.parametrize("gamma", [0.5, 1.0, 2.0, 2.51189, 4.0])
@pytest.mark.parametrize("q", range(1, 13))
def test_ladder_recursion_consistency(gamma, q):
    # closed form must satisfy v_i = gamma * (1 + sum of levels below)
    levels = build_power_ladder(gamma, q).levels
    for i in range(q):
        v_below = sum(levels[i + 1 :])
        assert levels[i] == pytest.approx(gamma * (v_below + 1.0), rel=1e-9)
    for a, b in zip(levels, levels[1:]):
        assert a > b > 0
    assert levels[0] / levels[-1] == pytest.approx((gamma + 1.0) ** (q - 1), rel=1e-9)


def test_validate_config_ok():
    cfg = SystemConfig(1, 4, 2.0, 1.0)
    assert validate_config(cfg) is cfg


def test_validate_config_degenerate_zero_traffic_ok():
    validate_config(SystemConfig(1, 1, 2.0, 0.0))


@pytest.mark.parametrize(
    "cfg,field",
    [
        (SystemConfig(0, 4, 2.0, 1.0), "num_channels"),
        (SystemConfig(1, 0, 2.0, 1.0), "num_levels"),
        (SystemConfig(1, 4, 0.0, 1.0), "sinr_target"),
        (SystemConfig(1, 4, 2.0, -0.5), "traffic_intensity"),
    ],
)
def test_validate_config_names_field(cfg, field):
    with pytest.raises(ConfigError) as err:
        validate_config(cfg)
    assert err.value.field == field


def test_total_traffic_derived():
    assert SystemConfig(5, 4, 2.0, 1.5).total_traffic == 7.5
