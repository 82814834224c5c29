import json

import pytest

from afcheck.cli import acceptance_file, load_instance_file, main, run_checks


def write(tmp_path, payload):
    path = tmp_path / "instance.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def strip_wall_times(report: dict) -> dict:
    report = json.loads(json.dumps(report))
    report.pop("wall_time_s", None)
    for check in report.get("checks", []):
        check.pop("wall_time_s", None)
    return report


def test_lukasiewicz_file_passes(tmp_path, capsys):
    path = write(
        tmp_path,
        {
            "quantales": {"q": {"kind": "lukasiewicz", "n": 2}},
            "checks": [{"op": "quantale_laws", "quantale": "q"}],
        },
    )
    code, out, err = run_cli(capsys, "check", path)
    assert code == 0
    report = json.loads(out)
    assert report["summary"] == {"pass": 1, "fail": 0, "skip": 0, "total": 1}
    assert "pass" in err


def test_broken_tensor_fails_with_witness(tmp_path, capsys):
    path = write(
        tmp_path,
        {
            "quantales": {
                "b": {"leq": [[1, 1], [0, 1]], "tensor": [[0, 0], [0, 0]], "unit": 1}
            },
            "checks": [{"op": "quantale_laws", "quantale": "b"}],
        },
    )
    code, out, _ = run_cli(capsys, "check", path)
    assert code == 1
    report = json.loads(out)
    witnesses = report["checks"][0]["witnesses"]
    assert {"law": "tensor-unit", "witness": [1], "detail": ""} in witnesses


def test_dangling_reference_exits_two(tmp_path, capsys):
    path = write(tmp_path, {"checks": [{"op": "quantale_laws", "quantale": "missing"}]})
    code, out, _ = run_cli(capsys, "check", path)
    assert code == 2
    assert "unresolved reference" in json.loads(out)["error"]


def test_invalid_json_exits_two(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, out, _ = run_cli(capsys, "check", str(path))
    assert code == 2


def test_unknown_check_op_exits_two(tmp_path, capsys):
    path = write(tmp_path, {"checks": [{"op": "does_not_exist"}]})
    code, _, _ = run_cli(capsys, "check", path)
    assert code == 2


def test_report_determinism(capsys):
    path = acceptance_file()
    code1, out1, _ = run_cli(capsys, "check", path)
    code2, out2, _ = run_cli(capsys, "check", path)
    assert code1 == code2 == 0
    first = strip_wall_times(json.loads(out1))
    second = strip_wall_times(json.loads(out2))
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_shipped_acceptance_file_passes(capsys):
    code, out, _ = run_cli(capsys, "check", acceptance_file())
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["fail"] == 0
    skips = [c["name"] for c in report["checks"] if c["status"] == "skip"]
    assert skips == ["rho-lattice-skips"]


def test_enumerate_census(capsys):
    code, out, _ = run_cli(capsys, "--max-size", "3", "enumerate", "topology-census")
    assert code == 0
    report = json.loads(out)
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["census[3]"]["counters"] == {"topologies": 29, "t0": 19}


def test_enumerate_roundtrip_seeded(capsys):
    code1, out1, _ = run_cli(capsys, "--seed", "3", "enumerate", "roundtrip-iso")
    code2, out2, _ = run_cli(capsys, "--seed", "3", "enumerate", "roundtrip-iso")
    assert code1 == code2 == 0
    assert strip_wall_times(json.loads(out1)) == strip_wall_times(json.loads(out2))


def test_split_pair_subcommand(capsys):
    code, out, _ = run_cli(capsys, "split-pair", "--x", "2", "--y", "2", "--f", "0,1", "--g", "1,0")
    assert code == 0
    assert json.loads(out) == {"found": False}
    code, out, _ = run_cli(capsys, "split-pair", "--x", "2", "--y", "1", "--f", "0,0", "--g", "0,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["found"] and payload["checks_ok"]


def test_zariski_subcommand(capsys):
    code, out, _ = run_cli(capsys, "zariski", acceptance_file(), "--affine-set", "sier", "--subset", "0")
    assert code == 0
    assert json.loads(out)["closure"] == [0]


def test_reflect_subcommand(capsys):
    code, out, _ = run_cli(capsys, "reflect", acceptance_file(), "--comma-object", "g_ba4")
    assert code == 0
    payload = json.loads(out)
    assert payload["reflected"]["monic"]
    assert payload["reflected"]["a_size"] == 2
    assert payload["unit_e"] == [0, 0, 1, 1]


def test_missing_file_exits_two(capsys):
    code, _, _ = run_cli(capsys, "check", "/nonexistent/path.json")
    assert code == 2


def test_workspace_loader_resolves_cross_references():
    ws = load_instance_file(acceptance_file())
    assert set(ws.quantales) == {"two", "luk2", "cost4"}
    assert "g_sier" in ws.comma_objects
    results = run_checks(ws)
    assert all(r["status"] in {"pass", "skip"} for r in results)
