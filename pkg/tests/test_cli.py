import json

import pytest

from weakyd.cli import (EXIT_ERROR, EXIT_FAIL, EXIT_OK, SuiteConfig, dump_wbha,
                        dump_yd_module, load_config, load_instance, main, render,
                        resolve_jobs, run_suites)
from weakyd.corpus import BUILTINS, DEFAULT_CORPUS, builtin
from weakyd.errors import ParseError, ValidationError
from weakyd.fields import GF, QQ
from test_wyb_operators import WYB_ROWS


def _write(tmp_path, doc, name="inst.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc, indent=1) if not isinstance(doc, str) else doc)
    return p


def test_builtin_dimensions():
    assert builtin("full_groupoid_2").wbha.carrier.dim == 4
    assert builtin("z2_group").wbha.carrier.dim == 2
    assert builtin("projection_full2_z3").projection.total.carrier.dim == 12
    assert set(DEFAULT_CORPUS) <= set(BUILTINS)
    with pytest.raises(ValidationError):
        builtin("no_such_thing")


def test_dump_load_round_trip(tmp_path, z2, dl):
    p = _write(tmp_path, dump_wbha(z2))
    back = load_instance(p).wbha
    for attr in ("mu", "eta", "eps", "delta", "lam", "t", "t_prime", "nabla"):
        assert getattr(back, attr) == getattr(z2, attr), attr
    q = _write(tmp_path, dump_yd_module(dl, base="full_groupoid_2"), "dl.json")
    m = load_instance(q).yd
    assert m.action == dl.action and m.coaction == dl.coaction


def test_shipped_instance_files_load(request):
    root = request.config.rootpath / "instances"
    kinds = {p.name: load_instance(p).kind for p in sorted(root.glob("*.json"))}
    assert kinds == {"dl_full2.json": "yd", "full2_groupoid.json": "wbha",
                     "z2_group.json": "wbha"}


def test_field_header(tmp_path, z2):
    doc = dump_wbha(z2)
    doc["field"] = "Fp:4"
    with pytest.raises(ValidationError, match="prime"):
        load_instance(_write(tmp_path, doc))
    doc["field"] = "Fp:5"
    assert load_instance(_write(tmp_path, doc)).wbha.field == GF(5)
    doc["field"] = "R"
    with pytest.raises(ParseError):
        load_instance(_write(tmp_path, doc))


def test_parse_errors_carry_lines(tmp_path, z2):
    with pytest.raises(ParseError, match="line 3"):
        load_instance(_write(tmp_path, '{\n "type": "wbha",\n "basis": [,]\n}'))
    doc = dump_wbha(z2)
    text = json.dumps(doc, indent=1).replace('"1/1"', "0.5", 1)
    text = text.replace('"1"', "0.5", 1) if "0.5" not in text else text
    p = _write(tmp_path, text)
    with pytest.raises(ParseError, match=r"line \d+: float 0.5"):
        load_instance(p)


def test_bad_scalar_and_shape(tmp_path, z2):
    doc = dump_wbha(z2)
    doc["mult"][0][0] = "x/y"
    with pytest.raises(ParseError):
        load_instance(_write(tmp_path, doc))
    doc = dump_wbha(z2)
    doc["mult"].pop()
    with pytest.raises(ValidationError, match="mult"):
        load_instance(_write(tmp_path, doc))


def test_invalid_groupoid_names_the_invariant(request, tmp_path):
    doc = json.loads((request.config.rootpath / "instances" / "full2_groupoid.json").read_text())
    doc["inverses"]["E12"] = "E12"
    with pytest.raises(ValidationError, match="groupoid invariant"):
        load_instance(_write(tmp_path, doc))


def test_wyb_suite_filter_rows(capsys):
    assert main(["check", "--instance", "full_groupoid_2", "--suite", "wyb"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    rows = [r["id"] for rep in doc["reports"] for r in rep["rows"]]
    assert rows == list(WYB_ROWS)
    assert len(rows) == 13


def test_corrupted_instance_exit_code(tmp_path, z2, capsys):
    doc = dump_wbha(z2)
    doc["mult"][0][0] = "2"
    p = _write(tmp_path, doc)
    code = main(["check", "--instance", str(p), "--suite", "wbb,antipode"])
    assert code == EXIT_FAIL
    doc = json.loads(capsys.readouterr().out)
    fails = [r for rep in doc["reports"] for r in rep["rows"] if r["status"] == "fail"]
    assert fails and all(r["witness"] for r in fails)


def test_error_exit_code(capsys):
    assert main(["check", "--instance", "z2_group", "--field", "Fp:4"]) == EXIT_ERROR
    assert "ValidationError" in capsys.readouterr().err
    assert main(["check", "--instance", "z2_group", "--suite", "nope"]) == EXIT_ERROR
    assert main(["check", "--instance", "/nonexistent.json"]) == EXIT_ERROR


def test_text_format_and_fp(capsys):
    assert main(["check", "--instance", "z2_group", "--suite", "wbb", "--field", "Fp:3",
                 "--format", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.rstrip().splitlines()[-1].endswith("0 fail, 0 skipped")


def test_list_command(capsys):
    assert main(["list"]) == EXIT_OK
    assert "full_groupoid_2" in capsys.readouterr().out


def test_jobs_env_override(monkeypatch):
    monkeypatch.delenv("WEAKYD_JOBS", raising=False)
    assert resolve_jobs(3) == 3
    assert resolve_jobs(0) >= 1
    monkeypatch.setenv("WEAKYD_JOBS", "5")
    assert resolve_jobs(1) == 5
    monkeypatch.setenv("WEAKYD_JOBS", "many")
    with pytest.raises(ValidationError):
        resolve_jobs(1)


def test_config_file(tmp_path, capsys):
    cfg = {"instances": ["z2_group"], "suites": "wyb,wbb", "format": "text", "jobs": 2}
    p = _write(tmp_path, cfg, "run.json")
    c = load_config(str(p))
    assert c.suites == ["wyb", "wbb"] and c.jobs == 2 and c.report_format == "text"
    out = tmp_path / "out.txt"
    assert main(["check", "--config", str(p), "-o", str(out)]) == EXIT_OK
    assert "pass" in out.read_text()
    with pytest.raises(ValidationError):
        SuiteConfig(suites=["bogus"])


def test_json_is_identical_across_job_counts():
    runs = []
    for jobs in (1, 4):
        cfg = SuiteConfig(instances=["full_groupoid_2", "flip_full2"],
                          suites=["wyb", "wbb", "yd"], jobs=jobs)
        reps, code = run_suites(cfg)
        runs.append(render(reps, cfg))
    assert code == EXIT_OK
    assert runs[0] == runs[1]
