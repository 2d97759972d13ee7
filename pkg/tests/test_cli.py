import json
import subprocess
import sys

import pytest

from cyclicdual.cli import main


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "cyclicdual", *args], capture_output=True)
    return proc.returncode, proc.stdout.decode(), proc.stderr.decode()


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("inst")
    out = {}
    for name in ("s3-collapse", "s3-orbit", "z6-two-normals", "s3-orbit-dual"):
        out[name] = str(d / f"{name}.json")
        assert main(["instances", "emit", name, "-o", out[name]]) == 0
    return out


class TestPara:
    def test_dual(self, capsys):
        assert main(["para", "dual", "2 2 : 1 2 3"]) == 0
        assert capsys.readouterr().out == "2 2 : 1 2 3\n"

    def test_compose_order(self, capsys):
        # g f with f = d_1 : 1 -> 2 applied first, then s_1 : 2 -> 1
        assert main(["para", "compose", "2 1 : 0 1 1", "1 2 : 0 2"]) == 0
        assert capsys.readouterr().out == "1 1 : 0 1\n"

    def test_compose_with_identity(self, capsys):
        assert main(["para", "compose", "2 2 : 0 1 2", "2 2 : 1 2 3"]) == 0
        assert capsys.readouterr().out == "2 2 : 1 2 3\n"

    def test_compose_mismatch(self):
        assert main(["para", "compose", "1 1 : 0 1", "2 2 : 1 2 3"]) == 2

    def test_check_escape(self, capsys):
        assert main(["para", "check", "--format", "structured", "0 1 : 1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["in_Delta"] and data["dual"] == "1 0 : 0 1" and data["dual_class"] == "K"
        assert all(data["checks"].values())

    @pytest.mark.parametrize("within,count", [("delta", 3), ("k", 15), ("lambda", 6)])
    def test_count(self, capsys, within, count):
        # K: f(0) in 0..4 and f(1) in f(0)..f(0)+2
        assert main(["para", "count", "--n", "1", "--m", "1", "--in", within]) == 0
        assert capsys.readouterr().out.strip() == str(count)

    def test_enumerate_lines(self, capsys):
        assert main(["para", "enumerate", "--n", "1", "--m", "1", "--window", "1", "--in", "delta"]) == 0
        assert capsys.readouterr().out.splitlines() == ["1 1 : 0 0", "1 1 : 0 1", "1 1 : 1 1"]

    def test_bad_inputs(self):
        assert main(["para", "dual", "2 2 : 3 2 1"]) == 1
        assert main(["para", "dual", "nonsense"]) == 2
        assert main(["para", "count", "--n", "-1", "--m", "1"]) == 2


class TestOrbit:
    def test_validate(self, files):
        assert main(["orbit", "validate", files["s3-collapse"]]) == 0
        assert main(["orbit", "validate", files["s3-orbit"]]) == 0

    def test_hom(self, files, capsys):
        assert main(["orbit", "hom", "--from", "A3", "--to", "A3", files["s3-orbit"]]) == 0
        assert capsys.readouterr().out.startswith("hom(A3, A3): 2 cosets")

    def test_hom_structured(self, files, capsys):
        assert main(["orbit", "hom", "--format", "structured", "--from", "1", "--to", "1",
                     files["s3-orbit"]]) == 0
        assert json.loads(capsys.readouterr().out)["count"] == 6

    def test_ho_and_dual(self, files, capsys):
        assert main(["orbit", "ho", "--from", "pt", "--to", "pt", files["s3-collapse"]]) == 0
        assert "2 classes of 2 cosets" in capsys.readouterr().out
        assert main(["orbit", "dual", "--from", "pt", "--to", "pt", "--class", "1",
                     "--format", "structured", files["s3-collapse"]]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["class"] == data["dual"]["class"] == ["(2 3)"]

    def test_theorem(self, files, capsys):
        assert main(["orbit", "theorem", files["s3-collapse"]]) == 0
        out = capsys.readouterr().out
        assert "23/23 checks pass" in out and "ho classes: pt->pt: 2" in out

    def test_error_codes(self, files, tmp_path):
        assert main(["orbit", "ho", "--from", "1", "--to", "1", files["s3-orbit"]]) == 1
        assert main(["orbit", "dual", "--from", "1", "--to", "1", "--class", "0",
                     files["s3-orbit-dual"]]) == 1
        assert main(["orbit", "theorem", files["s3-orbit-dual"]]) == 1
        assert main(["orbit", "hom", "--from", "Q", "--to", "pt", files["s3-collapse"]]) == 2
        assert main(["orbit", "validate", str(tmp_path / "missing.json")]) == 2
        bad = tmp_path / "bad.json"
        bad.write_text("{}")
        assert main(["orbit", "validate", str(bad)]) == 2

    def test_invalid_instance_exit_1(self, files, tmp_path):
        data = json.loads(open(files["z6-two-normals"]).read())
        data["duality"] = [0, 0]
        p = tmp_path / "broken.json"
        p.write_text(json.dumps(data))
        assert main(["orbit", "validate", str(p)]) == 1
        assert main(["orbit", "hom", "--from", "H", "--to", "H", str(p)]) == 1


class TestInstances:
    def test_list(self, capsys):
        assert main(["instances", "list"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 10

    def test_check(self):
        assert main(["instances", "check", "s3-orbit-dual"]) == 0
        assert main(["instances", "check", "nope"]) == 1


class TestProcess:
    def test_usage_error(self):
        code, _, err = run("para")
        assert code == 2 and "usage" in err

    @pytest.mark.parametrize("args", [
        ("instances", "emit", "z30-primes"),
        ("instances", "check", "z6-two-normals", "--format", "structured"),
        ("para", "enumerate", "--n", "2", "--m", "2", "--in", "lambda"),
    ])
    def test_byte_identical_runs(self, args):
        first = run(*args)
        assert first[0] == 0 and first[1]
        assert run(*args) == first

    def test_theorem_repeatable(self, files):
        first = run("orbit", "theorem", "--format", "structured", files["z6-two-normals"])
        assert first[0] == 0
        assert run("orbit", "theorem", "--format", "structured", files["z6-two-normals"]) == first
