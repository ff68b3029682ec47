import stat

import pytest


@pytest.fixture
def fake_cas(tmp_path):
    """Factory for stub CAS executables printing a canned transcript."""
    def build(output, status=0):
        path = tmp_path / "fake-gap"
        path.write_text(
            "#!/usr/bin/env python3\n"
            "import sys\n"
            "sys.stdin.read()\n"
            "sys.stdout.write(%r)\n"
            "sys.exit(%d)\n" % (output, status))
        path.chmod(path.stat().st_mode | stat.S_IXUSR)
        return str(path)
    return build


GOOD_TRANSCRIPT = (
    "#COUNT 6 2\n"
    "#REC 6|2|5|2,1,4,5,3|abelian,nilpotent,solvable\n"
    "#REC 6|1|3|2,1,3;2,3,1|solvable\n"
)


@pytest.fixture
def good_transcript():
    return GOOD_TRANSCRIPT
