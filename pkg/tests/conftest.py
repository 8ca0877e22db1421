from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and rep.when == "call":
                rows.append((rep.nodeid.split("::")[-1], outcome))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(rows):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
