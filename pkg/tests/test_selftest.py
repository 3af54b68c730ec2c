import splitfactor.core as core
from splitfactor import cli
from splitfactor.selftest import iteration_bound_sample, run_checks, theorem_bound_violations


def failed(checks):
    return [c.name for c in checks if not c.passed]


def test_all_checks_pass():
    assert failed(run_checks()) == []


def test_theorem_bounds_small_limit():
    assert theorem_bound_violations(64) == []


def test_printed_plus_sign_trips_offset_check(monkeypatch, capsys):
    def plus_sign(c_j, c_I_prime, B, i):
        num = c_j * c_I_prime + B
        d, rem = divmod(num, c_j + (1 << i))
        return None if rem or d > c_I_prime else d

    monkeypatch.setattr(core, "solve_offset", plus_sign)
    bad = failed(run_checks())
    assert "offset-d" in bad
    assert cli.cmd_selftest() == 1
    assert "FAIL offset-d" in capsys.readouterr().out


def test_unclamped_scan_still_sound():
    # without the 2**i - 1 clamp the scan only gets longer; results do not change
    def unclamped(n, split, stats):
        r = n - (1 << (split.j + split.i))
        if r < 0:
            return None
        dec = core.decompose_tail(r, split)
        for c_j in range(dec.c_J, 0, -1):
            stats.inner_iterations += 1
            t = core.transfer_coefficient(dec, dec.c_J - c_j, split)
            d = core.solve_offset(t.c_j, t.c_I_prime, t.B, split.i)
            if d is not None and c_j < (1 << split.i):
                pair = core.validate_candidate(c_j, t.c_I_prime - d, split, n)
                if pair:
                    return pair
        return None

    for n in iteration_bound_sample()[:500]:
        clamped = core.factor_step(n)
        s = core.SearchStats()
        pairs = [unclamped(n, sp, s) for sp in core.enumerate_splits(core.floor_log2(n))]
        first = next((p for p in pairs if p), None)
        assert getattr(clamped, "pair", None) == first
