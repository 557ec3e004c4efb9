import os
import runpy

import pytest

GALLERY = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "gallery")
SCRIPTS = sorted(f for f in os.listdir(GALLERY) if f.endswith(".py"))


@pytest.mark.parametrize("name", SCRIPTS)
def test_gallery_script_runs(name, capsys):
    runpy.run_path(os.path.join(GALLERY, name), run_name="__main__")
    assert capsys.readouterr().out
