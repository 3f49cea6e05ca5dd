"""CLI behaviour: subcommands, formats, output files, exit codes."""

import json

from chromroots.cli import main


def test_verify_quartic_exit_zero(capsys):
    rc = main(["verify-quartic", "--p-max", "3", "--q-max", "10"])
    out = capsys.readouterr().out
    assert rc == 0
    data = json.loads(out)
    assert data["experiment"] == "verify-quartic"


def test_minq_json(capsys):
    rc = main(["minq", "-p", "2", "--q-max", "10"])
    assert rc == 0
    data = json.loads(capsys.readouterr().out)
    assert data["summary"]["q_star"] == 4


def test_rootcloud_defaults_to_csv(capsys):
    rc = main(["rootcloud", "--order", "3"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].count(",") == 3
    assert len(lines) > 3


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    rc = main(["--format", "json", "--out", str(target), "verify-n3", "-n", "3"])
    assert rc == 0
    data = json.loads(target.read_text())
    assert data["summary"]["all_passed"] is True


def test_rootcloud_file_input(tmp_path):
    g6 = tmp_path / "graphs.g6"
    g6.write_text("Cl\nC~\n")
    rc = main(["--format", "json", "--out", str(tmp_path / "o.json"), "rootcloud", "--file", str(g6)])
    assert rc == 0


def test_usage_error_exits_2(capsys):
    assert main(["minq"]) == 2  # missing -p
    assert main(["no-such-command"]) == 2


def test_parameter_error_exits_2(capsys):
    assert main(["minq", "-p", "9"]) == 2
    assert "error" in capsys.readouterr().err


def test_seed_and_precision_flags(capsys):
    rc = main(["--precision-bits", "128", "--seed", "3", "kn-minus-2k2", "--n-from", "4", "--n-to", "4"])
    assert rc == 0
    data = json.loads(capsys.readouterr().out)
    assert data["parameters"]["precision_bits"] == 128


def test_global_flags_after_subcommand(capsys, tmp_path):
    # global flags are accepted on either side of the subcommand
    rc = main(["kn-minus-2k2", "--n-from", "4", "--n-to", "4", "--precision-bits", "128"])
    assert rc == 0
    data = json.loads(capsys.readouterr().out)
    assert data["parameters"]["precision_bits"] == 128
    target = tmp_path / "cloud.csv"
    rc = main(["rootcloud", "--order", "3", "--out", str(target)])
    assert rc == 0
    assert target.read_text().splitlines()[0] == "graph6,re,im,radius"
