import io
import subprocess
import sys

from lspgen.cli import main
from lspgen.maps import canonical_code, read_planar_code


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out


def run_cli_bytes(args):
    proc = subprocess.run([sys.executable, "-m", "lspgen.cli"] + args,
                          capture_output=True)
    return proc.returncode, proc.stdout


def test_count_lines(capsys):
    code, out = run_cli(["generate", "--rate", "5", "-k", "3", "--count"],
                        capsys)
    assert code == 0
    assert out.strip() == "5 3 4"


def test_count_range(capsys):
    code, out = run_cli(["generate", "--rate", "1-4", "--count"], capsys)
    assert code == 0
    assert [ln.split()[2] for ln in out.strip().splitlines()] \
        == ["2", "2", "4", "6"]


def test_predecoration_count(capsys):
    code, out = run_cli(["generate", "--rate", "4", "--count",
                         "--predecorations"], capsys)
    assert code == 0
    assert out.strip() == "4 1 2"


def test_deco_emission_matches_count(capsys):
    code, out = run_cli(["generate", "--rate", "3", "--format", "deco"],
                        capsys)
    assert code == 0
    records = [r for r in out.split("deco 1") if r.strip()]
    assert len(records) == 4


def test_sorted_output_is_stable(capsys):
    outs = []
    for threads in ("1", "3"):
        code, out = run_cli(["generate", "--rate", "1-4", "--sorted",
                             "--threads", threads, "--format", "deco"],
                            capsys)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_apply_ambo_cube():
    code, data = run_cli_bytes(["apply", "--op", "ambo", "--seed", "cube"])
    assert code == 0
    g = read_planar_code(data)[0]
    assert (g.n, g.ne, len(g.faces)) == (12, 24, 14)


def test_apply_identity_round_trip(tmp_path):
    code, data = run_cli_bytes(["apply", "--op", "identity", "--seed", "cube"])
    assert code == 0
    from lspgen.catalog import seed
    assert canonical_code(read_planar_code(data)[0]) \
        == canonical_code(seed("cube"))


def test_apply_file_inputs(tmp_path, capsys):
    code, data = run_cli_bytes(["apply", "--op", "identity", "--seed", "cube"])
    pc = tmp_path / "cube.pc"
    pc.write_bytes(data)
    deco = tmp_path / "x.deco"
    from lspgen.catalog import lookup
    from lspgen.decorations import write_deco
    deco.write_text(write_deco(lookup("ambo")), encoding="ascii")
    code, data = run_cli_bytes(["apply", "--op-file", str(deco),
                                "--seed-file", str(pc)])
    assert code == 0
    g = read_planar_code(data)[0]
    assert g.ne == 2 * 12


def test_verify_ok(capsys):
    code, out = run_cli(["verify", "--rate", "4", "-k", "1"], capsys)
    assert code == 0
    assert "ok" in out


def test_verify_rate_guard(capsys):
    assert main(["verify", "--rate", "9"]) == 2


def test_usage_errors(capsys):
    assert main(["generate"]) == 2
    assert main(["apply", "--op", "nonsense", "--seed", "cube"]) == 2
    assert main(["frobnicate"]) == 2


def test_generated_pc_round_trips():
    code, data = run_cli_bytes(["generate", "--rate", "3", "--format", "pc",
                                "--sorted"])
    assert code == 0
    graphs = read_planar_code(data)
    assert len(graphs) == 4
    again = read_planar_code(data)
    assert [canonical_code(g) for g in graphs] \
        == [canonical_code(g) for g in again]


def test_k2_rate10_count_line(capsys):
    code, out = run_cli(["generate", "--rate", "10", "-k", "2", "--count"],
                        capsys)
    assert code == 0
    assert out.strip() == "10 2 168"
