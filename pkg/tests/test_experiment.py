from fractions import Fraction

import pytest

from arborkit import CellResult, ExperimentConfig, emit_report, run_experiment


def small_config(**overrides):
    base = dict(
        selector="theorem5",
        k_values=(1,),
        n_values=(6,),
        trials=3,
        seed=11,
    )
    base.update(overrides)
    return ExperimentConfig(**base)


def test_selector_validation():
    with pytest.raises(ValueError):
        small_config(selector="theorem9")
    with pytest.raises(ValueError):
        small_config(selector="theorem2i", k_values=(1, 2))
    with pytest.raises(ValueError):
        small_config(selector="conjecture")
    with pytest.raises(ValueError):
        small_config(selector="custom")
    with pytest.raises(ValueError):
        small_config(selector="custom", custom_bound=Fraction(3, 2), remainder="tree", d=1)
    with pytest.raises(ValueError):
        small_config(selector="custom", custom_bound=Fraction(3, 2), remainder="forest")
    with pytest.raises(ValueError):
        small_config(trials=0)
    with pytest.raises(ValueError):
        small_config(k_values=(0,))


def test_cell_bounds_per_selector():
    assert small_config().cell_bound(1) == Fraction(6, 5)
    assert small_config().cell_bound(2) == Fraction(17, 8)
    assert small_config(selector="theorem2i").cell_bound(1) == Fraction(4, 3)
    two_ii = small_config(selector="theorem2ii")
    assert two_ii.cell_bound(1) == Fraction(3, 2)
    assert two_ii.cell_remainder() == ("forest", 2)
    conj = small_config(selector="conjecture", d=1)
    assert conj.cell_bound(1) == Fraction(4, 3)
    assert conj.cell_bound(2) == Fraction(9, 4)
    assert conj.cell_remainder() == ("forest", 1)
    cust = small_config(selector="custom", custom_bound=Fraction(7, 5), remainder="graph", d=3)
    assert cust.cell_bound(1) == Fraction(7, 5)
    assert cust.cell_remainder() == ("graph", 3)
    assert small_config().cell_remainder() == ("matching", None)


def test_run_experiment_is_deterministic():
    config = small_config(n_values=(5, 6), trials=4)
    first = run_experiment(config)
    second = run_experiment(config)
    strip = lambda rows: [(r.k, r.n, r.generated, r.decomposed, r.verified,
                           r.exhausted, r.gen_failed) for r in rows]
    assert strip(first) == strip(second)
    assert [(r.k, r.n) for r in first] == [(1, 5), (1, 6)]


def test_run_experiment_all_verified_at_theorem_bound():
    rows = run_experiment(small_config(n_values=(6, 8), trials=5))
    for row in rows:
        assert row.clean
        assert row.attempted == 5
        assert row.verified == 5


def test_parallel_jobs_give_identical_counts():
    config = small_config(n_values=(5, 7), trials=3)
    strip = lambda rows: [(r.k, r.n, r.generated, r.decomposed, r.verified,
                           r.exhausted, r.gen_failed) for r in rows]
    assert strip(run_experiment(config, jobs=2)) == strip(run_experiment(config, jobs=1))


def test_gen_failures_are_counted_not_fatal():
    config = small_config(trials=2, max_rejections=1, seed=0)
    rows = run_experiment(config)
    assert rows[0].gen_failed >= 1
    assert rows[0].attempted == 2
    assert not rows[0].clean


def test_cell_result_clean():
    good = CellResult(1, 6, Fraction(6, 5), "matching", None, 5, 5, 5, 5, 0, 0, 0.1)
    assert good.clean
    bad = CellResult(1, 6, Fraction(6, 5), "matching", None, 5, 5, 4, 4, 1, 0, 0.1)
    assert not bad.clean


def test_emit_report_shapes():
    config = small_config(trials=2)
    rows = run_experiment(config)
    text, payload = emit_report(config, rows)
    lines = text.splitlines()
    assert lines[0].split() == [
        "k", "n", "bound", "remainder", "d", "generated", "decomposed",
        "verified", "exhausted", "gen_failed", "success", "seconds",
    ]
    assert len(lines) == 1 + len(rows)
    assert payload["schema"] == 1
    assert payload["config"]["selector"] == "theorem5"
    assert payload["rows"][0]["bound"] == "6/5"
    assert payload["rows"][0]["success"] == f"{rows[0].verified}/{rows[0].attempted}"


def test_emit_report_with_no_rows():
    config = small_config()
    text, payload = emit_report(config, [])
    assert text.splitlines()[0].startswith("k")
    assert len(text.splitlines()) == 1
    assert payload["rows"] == []
