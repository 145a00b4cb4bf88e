import math

from icosian import coincidence


def test_np_printed_value():
    assert abs(coincidence.np_coincidence() - 1.001369) < 5e-7
    assert f"{coincidence.np_coincidence():.6f}" == "1.001369"


def test_np_close_to_mass_ratio():
    assert abs(coincidence.np_coincidence() - coincidence.MASS_RATIO_NP) < 1e-5


def test_ep_printed_value():
    assert abs(coincidence.ep_coincidence() - 0.000544558) < 5e-10
    assert f"{coincidence.ep_coincidence():.9f}" == "0.000544558"


def test_ep_close_to_mass_ratio():
    assert abs(coincidence.ep_coincidence() - coincidence.MASS_RATIO_EP) < 1e-7


def test_tilt_sine():
    t = coincidence.tilt_inversion()
    assert abs(t.sine - 0.3978318) < 5e-8
    assert t.sine == 2 * coincidence.DAYS_PER_YEAR * coincidence.MASS_RATIO_EP


def test_tilt_degrees():
    t = coincidence.tilt_inversion()
    assert abs(t.degrees - 23.442704) < 5e-6
    assert math.isclose(math.sin(math.radians(t.degrees)), t.sine)


def test_tilt_dms():
    t = coincidence.tilt_inversion()
    d, m, s = t.dms
    assert (d, m) == (23, 26)
    assert abs(s - 33.7) <= 0.1
    assert t.dms_string().startswith("23° 26′ 33.7")


def test_report_keys():
    rep = coincidence.report()
    assert set(rep) == {"np", "ep", "tilt"}
    assert rep["np"]["printed"] == "1.001369"
    assert rep["ep"]["printed"] == "0.000544558"
