import json

import pytest

from leavitt.cli import main


@pytest.fixture
def toeplitz_file(tmp_path):
    p = tmp_path / "toeplitz.json"
    p.write_text('{"vertices": ["v", "w"], '
                 '"edges": [["c", "v", "v"], ["f", "v", "w"]]}')
    return str(p)


@pytest.fixture
def cycle3_file(tmp_path):
    p = tmp_path / "cycle3.json"
    p.write_text('{"vertices": ["p", "q", "r"], "edges": '
                 '[["a", "p", "q"], ["b", "q", "r"], ["d", "r", "p"]]}')
    return str(p)


@pytest.fixture
def chain_file(tmp_path):
    p = tmp_path / "chain.json"
    p.write_text('{"vertices": ["v", "w"], "edges": [["e", "v", "w"]]}')
    return str(p)


@pytest.fixture
def nosource_file(tmp_path):
    p = tmp_path / "nosource.json"
    p.write_text('{"vertices": ["p", "q"], "edges": '
                 '[["a", "p", "q"], ["b", "q", "p"], ["c", "p", "q"]]}')
    return str(p)


def test_analyze_toeplitz(toeplitz_file, capsys):
    assert main(["analyze", toeplitz_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["principal_ideal_ring"] is False
    assert doc["cycles"][0]["exits"] == ["f"]
    assert doc["psi_witnesses"]
    assert doc["sources"][0]["kind"] == "cycle"
    assert doc["unsupported_shape"] is False


def test_analyze_pure_cycle(cycle3_file, capsys):
    assert main(["analyze", cycle3_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["principal_ideal_ring"] is True


def test_analyze_flags_no_sources(nosource_file, capsys):
    assert main(["analyze", nosource_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["unsupported_shape"] is True


def test_reduce(toeplitz_file, capsys):
    assert main(["reduce", toeplitz_file, "f*.f"]) == 0
    assert capsys.readouterr().out.strip() == "w"
    assert main(["reduce", toeplitz_file, "c.c* + f.f*"]) == 0
    assert capsys.readouterr().out.strip() == "v"
    assert main(["reduce", toeplitz_file, "v.w"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_reduce_bad_expression(toeplitz_file, capsys):
    assert main(["reduce", toeplitz_file, "q$"]) == 1


def test_bezout_success_and_schema(toeplitz_file, capsys):
    assert main(["bezout", toeplitz_file, "w", "f*", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) >= {"generator", "witnesses", "degree_bound", "case_trace"}
    assert len(doc["witnesses"]["forward"]) == 2
    assert doc["verified"] is True


def test_bezout_deterministic_output(toeplitz_file, capsys):
    argv = ["bezout", toeplitz_file, "c - v", "f.f*", "--json", "--seed", "4"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_bezout_case1_exit_code(nosource_file, capsys):
    assert main(["bezout", nosource_file, "p"]) == 2


def test_oracle_agreement(chain_file, capsys):
    assert main(["oracle", chain_file, "e", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["agreement"] is True
    assert doc["dimension"] == 2


def test_oracle_rejects_cyclic(toeplitz_file, capsys):
    assert main(["oracle", toeplitz_file, "w"]) == 1


def test_missing_file(capsys):
    assert main(["analyze", "/no/such/file.json"]) == 1
