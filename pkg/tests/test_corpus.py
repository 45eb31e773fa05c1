from paradim.corpus import iter_checks, run_checks, series_checks, table_checks


def test_table_checks_pass():
    checks = list(table_checks())
    assert len(checks) >= 400
    assert all(c.ok for c in checks)


def test_series_checks_pass():
    checks = list(series_checks(nmax=40))
    assert len(checks) == 2 * 54
    assert all(c.ok for c in checks)


def test_only_filter():
    names = [c.name for c in iter_checks(only="weight3")]
    assert names and all("weight3" in n for n in names)


def test_run_checks_green():
    total, failures = run_checks(only="table_k5")
    assert failures == [] and total > 0
