"""Command line behavior: exit codes, reports, and server parity.

Commands run in-process through the same entry point the console script
uses, so the exit-code contract (0 ok, 1 I/O, 2 query error, 3..125
violation count, 64 usage) is asserted on the real code path. The query
parity tests replay identical queries through the HTTP endpoint and
require byte-equal bodies.
"""

import json
import sys
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from oracles import read_jsonld, read_rdfxml, read_sparql_json

import gemforge.cli as cli_mod
from gemforge.etl import read_records, run_etl
from gemforge.linker import LinkSpec, discover_links
from gemforge.namespaces import RESOURCE_NS, resource
from gemforge.ontology.model import load_shipped_ontology
from gemforge.rdf import Format, parse_ntriples, parse_turtle, serialize
from gemforge.rdf.compare import isomorphic
from gemforge.server import ServerConfig, ServerState, build_snapshot, create_app
from gemforge.sparql import describe

FIXTURES = Path(__file__).parent / "fixtures"

GEM_FADO = resource("cultural-gems/27213")

PAPER_DESCRIBE = (
    "DESCRIBE <https://culturalgems.jrc.ec.europa.eu/resource/cultural-gems/27213>"
)

SELECT_PORTO = """\
SELECT ?gem ?name WHERE {
  ?gem <https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/inCity>
       <https://culturalgems.jrc.ec.europa.eu/resource/city/porto> .
  ?gem <http://www.w3.org/2000/01/rdf-schema#label> ?name .
}"""

CSV_HEADER = (
    "id,name,categories,city_id,city_name,lat,lon,description_lang,"
    "description,links,valid_from,valid_to,osm_tags"
)


def run_cli(args, capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli_mod.main(list(args))
    out, err = capsys.readouterr()
    code = excinfo.value.code
    return (0 if code is None else code), out, err


def gem_line(n, predicate, obj):
    return f"<{RESOURCE_NS}cultural-gems/{n}> <{predicate}> {obj} ."


LABEL = "http://www.w3.org/2000/01/rdf-schema#label"
TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"
LAT = "http://www.w3.org/2003/01/geo/wgs84_pos#lat"
MUSEUM = "https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/Museum"
IN_CITY = "https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/inCity"


@pytest.fixture(scope="module")
def data_nt(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    model = load_shipped_ontology()
    text = (FIXTURES / "gems.csv").read_text(encoding="utf-8")
    records = [record for record, error in read_records(text, "csv") if record]
    graph, _ = run_etl(records, model)
    path = root / "gems.nt"
    path.write_text(serialize(graph, Format.NTRIPLES), encoding="utf-8")
    return str(path)


@pytest.fixture(scope="module")
def defect_nt(tmp_path_factory):
    """Three planted defects, one each: range, unknown type, dangling."""
    lines = [
        gem_line(1, TYPE, f"<{MUSEUM}>"),
        gem_line(1, LABEL, '"Bad latitude"'),
        gem_line(1, LAT, '"123.0"'),
        gem_line(2, TYPE, "<http://other.example/Nope>"),
        gem_line(2, LABEL, '"Unknown type"'),
        gem_line(3, TYPE, f"<{MUSEUM}>"),
        gem_line(3, IN_CITY, f"<{RESOURCE_NS}city/ghost>"),
        gem_line(4, TYPE, f"<{MUSEUM}>"),
        gem_line(4, LABEL, '"Clean"'),
    ]
    path = tmp_path_factory.mktemp("defects") / "defects.nt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


class TestUsage:
    def test_help_lists_subcommands(self, capsys):
        code, out, _ = run_cli(["--help"], capsys)
        assert code == 0
        for name in ("validate", "etl", "link", "query", "serve", "export"):
            assert name in out

    @pytest.mark.parametrize(
        "command,flag",
        [
            ("validate", "--ontology"),
            ("etl", "--rdf-format"),
            ("link", "--all-pairs"),
            ("query", "--output"),
            ("serve", "--bind"),
            ("export", "--format"),
        ],
    )
    def test_subcommand_help_lists_flags(self, capsys, command, flag):
        code, out, _ = run_cli([command, "--help"], capsys)
        assert code == 0
        assert flag in out

    def test_unknown_flag_is_64(self, capsys, data_nt):
        code, _, err = run_cli(["validate", data_nt, "--frobnicate"], capsys)
        assert code == 64
        assert "frobnicate" in err

    def test_unknown_subcommand_is_64(self, capsys):
        code, _, _ = run_cli(["conjure"], capsys)
        assert code == 64

    def test_version(self, capsys):
        code, out, _ = run_cli(["--version"], capsys)
        assert code == 0
        assert "gemforge" in out


class TestEtl:
    def test_deterministic_across_runs(self, capsys, tmp_path):
        first = tmp_path / "a.nt"
        second = tmp_path / "b.nt"
        for target in (first, second):
            code, _, err = run_cli(
                ["etl", str(FIXTURES / "gems.csv"), "-o", str(target)], capsys
            )
            assert code == 0
            assert "minted 10" in err
        assert first.read_bytes() == second.read_bytes()
        assert len(parse_ntriples(first.read_text())) == 121

    def test_turtle_output_isomorphic(self, capsys, tmp_path, data_nt):
        target = tmp_path / "gems.ttl"
        code, _, _ = run_cli(
            [
                "etl",
                str(FIXTURES / "gems.csv"),
                "-o",
                str(target),
                "--rdf-format",
                "ttl",
            ],
            capsys,
        )
        assert code == 0
        assert isomorphic(
            parse_turtle(target.read_text()),
            parse_ntriples(Path(data_nt).read_text()),
        )

    def test_rejects_logged_not_fatal(self, capsys, tmp_path):
        source = tmp_path / "mixed.csv"
        source.write_text(
            CSV_HEADER + "\n"
            "1,Good Museum,museum,1,Lisboa,38.7,-9.1,,,,,,\n"
            "2,Bad Row,museum,1,Lisboa,not_a_number,-9.1,,,,,,\n",
            encoding="utf-8",
        )
        code, out, err = run_cli(
            ["etl", str(source), "-o", str(tmp_path / "out.nt")], capsys
        )
        assert code == 0
        assert "reject record 2" in err
        assert "minted 1, rejected 1" in err

    def test_unknown_column_is_io_error(self, capsys, tmp_path):
        source = tmp_path / "bad.csv"
        source.write_text(
            CSV_HEADER + ",surprise\n1,X,museum,1,L,38,-9,,,,,,,\n",
            encoding="utf-8",
        )
        code, _, err = run_cli(
            ["etl", str(source), "-o", str(tmp_path / "out.nt")], capsys
        )
        assert code == 1
        assert "surprise" in err

    def test_missing_input_is_1(self, capsys, tmp_path):
        code, _, _ = run_cli(
            ["etl", str(tmp_path / "absent.csv"), "-o", str(tmp_path / "o")],
            capsys,
        )
        assert code == 1


class TestValidate:
    def test_clean_dataset_exits_0(self, capsys, data_nt):
        code, out, err = run_cli(["validate", data_nt], capsys)
        assert code == 0
        assert out == ""
        assert "checked 10 subjects, 0 violations" in err

    def test_clean_json_report(self, capsys, data_nt):
        code, out, _ = run_cli(["validate", data_nt, "--json"], capsys)
        assert code == 0
        assert json.loads(out) == {
            "subjects_checked": 10,
            "violation_count": 0,
            "violations": [],
        }

    def test_three_defects_exit_3(self, capsys, defect_nt):
        code, out, _ = run_cli(["validate", defect_nt], capsys)
        assert code == 3
        assert len(out.strip().splitlines()) == 3

    def test_defect_json_report(self, capsys, defect_nt):
        code, out, _ = run_cli(["validate", defect_nt, "--json"], capsys)
        assert code == 3
        report = json.loads(out)
        assert report["violation_count"] == 3
        codes = {v["code"] for v in report["violations"]}
        assert codes == {"coordinate-range", "unknown-type", "dangling-object"}

    def test_single_defect_still_exit_3(self, capsys, tmp_path):
        # codes 1 and 2 mean I/O and query failure, so small counts clamp
        path = tmp_path / "one.nt"
        path.write_text(
            gem_line(1, TYPE, f"<{MUSEUM}>") + "\n"
            + gem_line(1, LAT, '"99.5"') + "\n",
            encoding="utf-8",
        )
        code, out, _ = run_cli(["validate", str(path)], capsys)
        assert code == 3
        assert len(out.strip().splitlines()) == 1

    def test_violation_count_caps_at_125(self, capsys, tmp_path):
        lines = []
        for n in range(130):
            lines.append(gem_line(n, TYPE, f"<{MUSEUM}>"))
            lines.append(gem_line(n, LAT, '"200.0"'))
        path = tmp_path / "many.nt"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        code, out, _ = run_cli(["validate", str(path)], capsys)
        assert code == 125
        assert len(out.strip().splitlines()) == 130

    def test_missing_file_is_1(self, capsys, tmp_path):
        code, _, _ = run_cli(["validate", str(tmp_path / "no.nt")], capsys)
        assert code == 1

    def test_unparseable_file_is_1(self, capsys, tmp_path):
        path = tmp_path / "garbage.nt"
        path.write_text("this is not rdf\n", encoding="utf-8")
        code, _, _ = run_cli(["validate", str(path)], capsys)
        assert code == 1


@pytest.fixture(scope="module")
def http_client(data_nt):
    config = ServerConfig(data_path=data_nt)
    return TestClient(create_app(ServerState(build_snapshot(config))))


class TestQuery:
    def test_describe_to_turtle(self, capsys, data_nt):
        code, out, _ = run_cli(["query", data_nt, PAPER_DESCRIBE], capsys)
        assert code == 0
        graph = parse_turtle(out)
        expected = describe(parse_ntriples(Path(data_nt).read_text()), GEM_FADO)
        assert isomorphic(graph, expected)

    def test_select_defaults_to_json(self, capsys, data_nt):
        code, out, _ = run_cli(["query", data_nt, SELECT_PORTO], capsys)
        assert code == 0
        names, rows = read_sparql_json(out)
        assert names == ["gem", "name"]
        assert len(rows) == 4

    @pytest.mark.parametrize(
        "token", ["application/json", "application/xml", "text/html"]
    )
    def test_select_parity_with_server(self, capsys, data_nt, http_client, token):
        response = http_client.get(
            "/sparql", params={"query": SELECT_PORTO, "output": token}
        )
        code, out, _ = run_cli(
            ["query", data_nt, SELECT_PORTO, "--output", token], capsys
        )
        assert code == 0 and response.status_code == 200
        assert out.encode("utf-8") == response.content

    @pytest.mark.parametrize(
        "token",
        ["text/rdf+n3", "application/rdf+xml", "application/json", "text/html"],
    )
    def test_describe_parity_with_server(
        self, capsys, data_nt, http_client, token
    ):
        response = http_client.get(
            "/sparql", params={"query": PAPER_DESCRIBE, "output": token}
        )
        code, out, _ = run_cli(
            ["query", data_nt, PAPER_DESCRIBE, "--output", token], capsys
        )
        assert code == 0 and response.status_code == 200
        assert out.encode("utf-8") == response.content

    def test_friendly_aliases(self, capsys, data_nt):
        code, ttl, _ = run_cli(
            ["query", data_nt, PAPER_DESCRIBE, "--output", "turtle"], capsys
        )
        assert code == 0
        code, nt, _ = run_cli(
            ["query", data_nt, PAPER_DESCRIBE, "--output", "nt"], capsys
        )
        assert code == 0
        code, jsonld, _ = run_cli(
            ["query", data_nt, PAPER_DESCRIBE, "--output", "jsonld"], capsys
        )
        assert code == 0
        reference = parse_turtle(ttl)
        assert isomorphic(parse_ntriples(nt), reference)
        assert isomorphic(read_jsonld(jsonld), reference)

    def test_query_from_file(self, capsys, data_nt, tmp_path):
        query_path = tmp_path / "q.rq"
        query_path.write_text(PAPER_DESCRIBE, encoding="utf-8")
        direct = run_cli(["query", data_nt, PAPER_DESCRIBE], capsys)
        from_file = run_cli(
            ["query", data_nt, "-f", str(query_path)], capsys
        )
        assert direct == from_file

    def test_malformed_query_is_2(self, capsys, data_nt):
        code, _, err = run_cli(
            ["query", data_nt, "SELECT ?s WHERE { ?s ?p }"], capsys
        )
        assert code == 2
        assert "line 1" in err

    def test_unsupported_feature_is_2(self, capsys, data_nt):
        code, _, err = run_cli(["query", data_nt, "ASK { ?s ?p ?o }"], capsys)
        assert code == 2
        assert "unsupported feature: ASK" in err

    def test_unknown_token_is_64(self, capsys, data_nt):
        code, _, _ = run_cli(
            ["query", data_nt, PAPER_DESCRIBE, "--output", "docx"], capsys
        )
        assert code == 64

    def test_select_with_graph_token_is_2(self, capsys, data_nt):
        code, _, err = run_cli(
            ["query", data_nt, SELECT_PORTO, "--output", "nt"], capsys
        )
        assert code == 2
        assert "result table" in err

    def test_no_query_is_64(self, capsys, data_nt):
        code, _, _ = run_cli(["query", data_nt], capsys)
        assert code == 64

    def test_query_and_file_together_is_64(self, capsys, data_nt, tmp_path):
        query_path = tmp_path / "q.rq"
        query_path.write_text(PAPER_DESCRIBE, encoding="utf-8")
        code, _, _ = run_cli(
            ["query", data_nt, PAPER_DESCRIBE, "-f", str(query_path)], capsys
        )
        assert code == 64

    def test_missing_data_is_1(self, capsys, tmp_path):
        code, _, _ = run_cli(
            ["query", str(tmp_path / "no.nt"), PAPER_DESCRIBE], capsys
        )
        assert code == 1


class TestExport:
    READBACK = {
        "ttl": parse_turtle,
        "nt": parse_ntriples,
        "rdfxml": read_rdfxml,
        "jsonld": read_jsonld,
    }

    @pytest.mark.parametrize("fmt", sorted(READBACK))
    def test_round_trip(self, capsys, data_nt, tmp_path, fmt):
        target = tmp_path / f"out.{fmt}"
        code, _, _ = run_cli(
            ["export", data_nt, "-o", str(target), "--format", fmt], capsys
        )
        assert code == 0
        original = parse_ntriples(Path(data_nt).read_text())
        assert isomorphic(self.READBACK[fmt](target.read_text()), original)

    def test_deterministic_bytes(self, capsys, data_nt, tmp_path):
        outputs = []
        for n in range(2):
            target = tmp_path / f"run{n}.ttl"
            run_cli(
                ["export", data_nt, "-o", str(target), "--format", "ttl"],
                capsys,
            )
            outputs.append(target.read_bytes())
        assert outputs[0] == outputs[1]

    def test_stdout_when_no_target(self, capsys, data_nt):
        code, out, _ = run_cli(
            ["export", data_nt, "--format", "nt"], capsys
        )
        assert code == 0
        assert len(parse_ntriples(out)) == 121

    def test_unknown_format_is_64(self, capsys, data_nt):
        code, _, _ = run_cli(
            ["export", data_nt, "--format", "docx"], capsys
        )
        assert code == 64


class TestLink:
    def test_accepted_links_to_stdout(self, capsys, data_nt):
        code, out, err = run_cli(
            ["link", data_nt, str(FIXTURES / "external.ttl")], capsys
        )
        assert code == 0
        produced = parse_ntriples(out)
        left = parse_ntriples(Path(data_nt).read_text())
        right = parse_turtle((FIXTURES / "external.ttl").read_text())
        expected = {
            (c.left, c.right)
            for c in discover_links(left, right, LinkSpec())
            if c.verdict == "accept"
        }
        assert {
            (t.subject, t.object) for t in produced
        } == expected
        assert len(expected) == 4
        assert "4 accepted" in err

    def test_review_csv_written(self, capsys, data_nt, tmp_path):
        review = tmp_path / "review.csv"
        code, _, _ = run_cli(
            [
                "link",
                data_nt,
                str(FIXTURES / "external.ttl"),
                "--accepted",
                str(tmp_path / "links.nt"),
                "--review",
                str(review),
            ],
            capsys,
        )
        assert code == 0
        assert review.read_text().startswith("left_iri,right_iri,score")

    def test_threshold_from_config(self, capsys, data_nt, tmp_path):
        config = tmp_path / "link.toml"
        config.write_text("accept_threshold = 0.99\n", encoding="utf-8")
        code, out, _ = run_cli(
            [
                "link",
                data_nt,
                str(FIXTURES / "external.ttl"),
                "--config",
                str(config),
            ],
            capsys,
        )
        assert code == 0
        assert len(parse_ntriples(out)) == 2

    def test_all_pairs_same_accepts(self, capsys, data_nt):
        blocked = run_cli(
            ["link", data_nt, str(FIXTURES / "external.ttl")], capsys
        )
        everything = run_cli(
            ["link", data_nt, str(FIXTURES / "external.ttl"), "--all-pairs"],
            capsys,
        )
        assert blocked[1] == everything[1]

    def test_bad_config_is_1(self, capsys, data_nt, tmp_path):
        config = tmp_path / "bad.toml"
        config.write_text("accept_threshold = -3\n", encoding="utf-8")
        code, _, _ = run_cli(
            [
                "link",
                data_nt,
                str(FIXTURES / "external.ttl"),
                "--config",
                str(config),
            ],
            capsys,
        )
        assert code == 1


class FakeUvicorn:
    def __init__(self):
        self.calls = []

    def run(self, app, host=None, port=None, log_level=None):
        self.calls.append((app, host, port))


class TestServe:
    @pytest.fixture()
    def fake_uvicorn(self, monkeypatch):
        fake = FakeUvicorn()
        monkeypatch.setitem(sys.modules, "uvicorn", fake)
        return fake

    def test_flag_beats_env_beats_file(
        self, capsys, data_nt, tmp_path, monkeypatch, fake_uvicorn
    ):
        config = tmp_path / "server.toml"
        config.write_text(
            f'bind = "127.0.0.1:9090"\ndata_path = "{data_nt}"\n',
            encoding="utf-8",
        )
        monkeypatch.setenv("GEMFORGE_BIND", "127.0.0.1:9100")
        code, _, _ = run_cli(
            [
                "serve",
                "--config",
                str(config),
                "--bind",
                "127.0.0.1:9200",
            ],
            capsys,
        )
        assert code == 0
        app, host, port = fake_uvicorn.calls[0]
        assert (host, port) == ("127.0.0.1", 9200)
        response = TestClient(app).get("/healthz")
        assert response.json()["triples"] == 121

    def test_env_overrides_file(
        self, capsys, data_nt, tmp_path, monkeypatch, fake_uvicorn
    ):
        config = tmp_path / "server.toml"
        config.write_text(
            f'bind = "127.0.0.1:9090"\ndata_path = "{data_nt}"\n',
            encoding="utf-8",
        )
        monkeypatch.setenv("GEMFORGE_BIND", "127.0.0.1:9100")
        code, _, _ = run_cli(["serve", "--config", str(config)], capsys)
        assert code == 0
        assert fake_uvicorn.calls[0][2] == 9100

    def test_bad_bind_flag_is_64(self, capsys, data_nt, fake_uvicorn):
        code, _, _ = run_cli(
            ["serve", "--data", data_nt, "--bind", "nonsense"], capsys
        )
        assert code == 64

    def test_missing_data_is_1(self, capsys, tmp_path, fake_uvicorn):
        code, _, _ = run_cli(
            ["serve", "--data", str(tmp_path / "no.nt")], capsys
        )
        assert code == 1

    def test_bad_config_file_is_1(self, capsys, tmp_path, fake_uvicorn):
        config = tmp_path / "server.toml"
        config.write_text('listen = "nope"\n', encoding="utf-8")
        code, _, _ = run_cli(["serve", "--config", str(config)], capsys)
        assert code == 1
