import pathlib
import runpy

import pytest

DEMO_DIR = pathlib.Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize(
    "script", sorted(p.name for p in DEMO_DIR.glob("*.py"))
)
def test_demo_runs(script, capsys):
    runpy.run_path(str(DEMO_DIR / script), run_name="__main__")
    out = capsys.readouterr().out
    assert out.strip()
