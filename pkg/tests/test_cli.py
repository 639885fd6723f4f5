import io
import xml.etree.ElementTree as ET

import pytest

from hexid import cli
from hexid.lattice import distance


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_verify_valid():
    code, text = run("verify", "--r", "6")
    assert code == 0
    assert text.startswith("r=6 valid=true vertices=252 pairs=")
    assert text.count("\n") == 1


def test_verify_drop_cdprime():
    code, text = run("verify", "--r", "6", "--drop-cdprime")
    lines = text.splitlines()
    assert code == 1
    assert lines[0].startswith("r=6 valid=false")
    assert 2 <= len(lines) <= 101
    assert all(line.startswith("confused (") for line in lines[1:])


@pytest.mark.parametrize("argv", [["verify", "--r", "0"], ["verify", "--r", "65"], ["verify", "--r", "x"]])
def test_verify_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        run(*argv)
    assert exc.value.code == 2


def test_r1_note_on_stderr(capsys):
    code, text = run("verify", "--r", "1")
    assert text.startswith("r=1 ")
    assert "r=1" in capsys.readouterr().err


def test_density_rows():
    code, text = run("density", "--r-min", "15", "--r-max", "20")
    rows = text.splitlines()
    assert code == 0
    assert rows[0] == "r\texact\tdecimal4\ttheorem_match\tnote"
    assert "16\t83/1632\t0.0509\tyes\t" in rows
    assert "18\t31/684\t0.0453\tyes\t" in rows
    assert "20\t103/2520\t0.0409\tyes\t" in rows
    r15 = rows[1].split("\t")
    assert r15[:4] == ["15", "307/5632", "0.0545", "no"]
    assert "1227/22528" in r15[4]


def test_density_with_literature():
    _, text = run("density", "--r-min", "16", "--r-max", "17", "--with-literature")
    rows = text.splitlines()
    assert rows[0].endswith("\tliterature")
    assert rows[1].endswith("\t1/18")
    assert rows[2].endswith("\t1/22")


@pytest.mark.parametrize(
    "argv",
    [["density", "--r-min", "5", "--r-max", "4"], ["density", "--r-min", "0", "--r-max", "4"], ["density", "--r-min", "1", "--r-max", "65"]],
)
def test_density_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        run(*argv)
    assert exc.value.code == 2


def test_render_text_examples():
    assert run("render", "--r", "6", "--x0", "0", "--x1", "17", "--y0", "0", "--y1", "0")[1] == "#o#o#o############\n"
    assert run("render", "--r", "6", "--x0", "0", "--x1", "5", "--y0", "3", "--y1", "3")[1] == ".#....\n"
    assert run("render", "--r", "6", "--x0", "0", "--x1", "0", "--y0", "1", "--y1", "1")[1] == ".\n"


def test_render_text_top_row_first():
    _, text = run("render", "--r", "6", "--x0", "0", "--x1", "2", "--y0", "0", "--y1", "3")
    assert text.splitlines() == [".#.", "...", "...", "#o#"]


def test_render_svg_well_formed():
    _, text = run("render", "--r", "6", "--x0", "0", "--x1", "9", "--y0", "-2", "--y1", "4", "--format", "svg")
    root = ET.fromstring(text.encode())
    ns = "{http://www.w3.org/2000/svg}"
    circles = root.findall(f".//{ns}circle")
    lines = root.findall(f".//{ns}line")
    assert len(circles) == 10 * 7
    horizontal = 9 * 7
    vertical = sum(1 for y in range(-2, 4) for x in range(10) if (x + y) % 2 == 0)
    assert len(lines) == horizontal + vertical
    filled = [c for c in circles if c.get("fill") == "black"]
    hollow = [c for c in circles if c.get("fill") == "white"]
    # row 0: columns 0,2,4,6,7,8,9 filled, 1,3,5 hollow; row 3: columns 1 and 7
    assert len(filled) == 9
    assert len(hollow) == 3
    _, picture = run("render", "--r", "6", "--x0", "0", "--x1", "9", "--y0", "-2", "--y1", "4")
    assert picture.count("#") == len(filled) and picture.count("o") == len(hollow)


def test_render_rejects_bad_windows():
    for argv in (
        ["render", "--r", "6", "--x0", "3", "--x1", "2", "--y0", "0", "--y1", "0"],
        ["render", "--r", "6", "--x0", "0", "--x1", "1000", "--y0", "0", "--y1", "1000"],
    ):
        with pytest.raises(SystemExit) as exc:
            run(*argv)
        assert exc.value.code == 2


def test_claims_small():
    code, text = run("claims", "--max-k", "1", "--max-r", "2")
    lines = text.splitlines()
    assert code == 0
    assert [line.split()[0] for line in lines] == [f"claim{n}" for n in range(1, 10)]
    assert all(line.split()[1] == "pass" for line in lines)


def test_claims_sabotaged_distance():
    def broken(u, v):
        d = distance(u, v)
        return d + 2 if u != v and abs(u[0] - v[0]) >= abs(u[1] - v[1]) else d

    args = cli.build_parser().parse_args(["claims", "--max-k", "2", "--max-r", "3"])
    out = io.StringIO()
    assert cli.cmd_claims(args, out, dist=broken) == 1
    assert "claim2 FAIL" in out.getvalue()
