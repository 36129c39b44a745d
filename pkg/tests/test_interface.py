import http.client
import json
import threading
import time

import pytest

from nlbwm.cli import main
from nlbwm.server import handle_analyze, make_server


@pytest.fixture
def ex1_file(tmp_path, ex1):
    path = tmp_path / "ex1.json"
    path.write_text(json.dumps(ex1.to_dict()))
    return str(path)


@pytest.fixture
def ex6_body(ex6):
    return ex6.to_dict()


@pytest.fixture(scope="module")
def server():
    httpd = make_server(port=0, ui_dir=None)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    yield httpd
    httpd.shutdown()
    httpd.server_close()


def request(server, method, path, body=None):
    conn = http.client.HTTPConnection("127.0.0.1", server.server_port, timeout=10)
    payload = json.dumps(body) if isinstance(body, (dict, list)) else body
    headers = {"Content-Type": "application/json"} if payload is not None else {}
    conn.request(method, path, body=payload, headers=headers)
    resp = conn.getresponse()
    data = resp.read().decode()
    conn.close()
    return resp.status, data


class TestCli:
    def test_analyze_rounds_like_the_tables(self, ex1_file, capsys):
        assert main(["analyze", ex1_file, "--round", "4"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["epsilonStar"] == 0.5422
        assert out["cr"] == 0.1037
        assert out["bestWeights"] == [0.4857, 0.0571, 0.1976, 0.2024, 0.0571]
        assert out["anchor"] == {"kind": "pair", "i": 4, "j": 3}

    def test_analyze_full_precision_by_default(self, ex1_file, capsys):
        assert main(["analyze", ex1_file]) == 0
        out = json.loads(capsys.readouterr().out)
        assert abs(out["epsilonStar"] - 0.5422) < 5e-4
        assert len(str(out["epsilonStar"])) > 8

    def test_analyze_legacy_section(self, ex1_file, capsys):
        assert main(["analyze", ex1_file, "--legacy", "--round", "4"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["legacy"]["epsilonStar"] == 0.5363
        assert out["legacy"]["malformedIntervals"] is True

    def test_analyze_stdin(self, ex5, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(ex5.to_dict())))
        assert main(["analyze", "--round", "4"]) == 0
        assert json.loads(capsys.readouterr().out)["cr"] == 1.0

    def test_analyze_csv(self, tmp_path, capsys):
        path = tmp_path / "pcs.csv"
        path.write_text("bestToOther,1,1,2,7\notherToWorst,7,7,3,1\n")
        assert main(["analyze", str(path), "--round", "4"]) == 0
        assert json.loads(capsys.readouterr().out)["epsilonStar"] == 0.1623

    def test_analyze_group_list_payload(self, tmp_path, ex4_members, capsys):
        path = tmp_path / "group.json"
        path.write_text(json.dumps([m.to_dict() for m in ex4_members]))
        assert main(["analyze", str(path), "--round", "4"]) == 0
        assert json.loads(capsys.readouterr().out)["cr"] == 0.1471

    def test_validation_error_exit_code_and_stderr(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"best": [1], "worst": [1], "bestToOther": [1, 2], "otherToWorst": [2, 1]}))
        assert main(["analyze", str(path)]) == 2
        err = capsys.readouterr().err
        assert err.count("\n") == 1  # single-line machine-readable error
        parsed = json.loads(err)
        assert parsed["type"] == "RoleConflictError"

    def test_malformed_json_exit_code(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["analyze", str(path)]) == 2
        assert json.loads(capsys.readouterr().err)["type"] == "InvalidInput"

    def test_ci_table_output(self, capsys):
        assert main(["ci", "--scale", "saaty"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 8
        assert lines[-1] == "9\t5.2280"

    def test_ci_json(self, capsys):
        assert main(["ci", "--scale", "lootsma", "--json"]) == 0
        rows = json.loads(capsys.readouterr().out)["rows"]
        assert rows[-1][0] == 16

    def test_aggregate_files(self, tmp_path, ex4_members, capsys):
        paths = []
        for k, member in enumerate(ex4_members):
            p = tmp_path / f"dm{k}.json"
            p.write_text(json.dumps(member.to_dict()))
            paths.append(str(p))
        assert main(["aggregate", *paths, "--round", "4"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["pcs"]["bestToOther"][1] == pytest.approx(3.1623, abs=5e-4)
        assert out["report"]["cr"] == 0.1471

    def test_verify_file(self, ex1_file, capsys):
        assert main(["verify", ex1_file]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["checked"] == 1 and out["mismatched"] == 0

    def test_verify_random_seeded(self, capsys):
        assert main(["verify", "--random", "12", "--seed", "1", "--scale", "lootsma"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["checked"] == 12 and out["mismatches"] == []

    def test_verify_needs_input(self, capsys):
        assert main(["verify"]) == 2

    def test_analyze_with_verify_flag(self, ex1_file, capsys):
        assert main(["analyze", ex1_file, "--verify"]) == 0


class TestHttp:
    def test_analyze_bare_body(self, server, ex6_body):
        status, data = request(server, "POST", "/api/analyze", ex6_body)
        assert status == 200
        out = json.loads(data)
        assert out["epsilonStar"] == pytest.approx(0.1623, abs=5e-4)
        assert out["cr"] == pytest.approx(0.0436, abs=5e-4)

    def test_analyze_envelope_with_options(self, server, ex6_body):
        status, data = request(
            server, "POST", "/api/analyze", {"pcs": ex6_body, "options": {"round": 4}}
        )
        assert status == 200
        assert json.loads(data)["epsilonStar"] == 0.1623

    def test_group_mode_list(self, server, ex4_members):
        body = [m.to_dict() for m in ex4_members]
        status, data = request(server, "POST", "/api/analyze", body)
        assert status == 200
        assert json.loads(data)["cr"] == pytest.approx(0.1471, abs=5e-4)

    def test_role_error_is_422(self, server):
        bad = {"best": [1], "worst": [1], "bestToOther": [1, 2], "otherToWorst": [2, 1]}
        status, data = request(server, "POST", "/api/analyze", bad)
        assert status == 422
        assert json.loads(data)["type"] == "RoleConflictError"

    def test_validation_error_is_400(self, server):
        bad = {"best": [1], "worst": [2], "bestToOther": [1, -2], "otherToWorst": [2, 1]}
        status, data = request(server, "POST", "/api/analyze", bad)
        assert status == 400

    def test_malformed_json_is_400(self, server):
        status, data = request(server, "POST", "/api/analyze", "{oops")
        assert status == 400

    def test_consistent_body(self, server):
        body = {"best": [1], "worst": [3], "bestToOther": [1, 2, 4], "otherToWorst": [4, 2, 1]}
        status, data = request(server, "POST", "/api/analyze", body)
        out = json.loads(data)
        assert out["epsilonStar"] == 0 and out["cr"] == 0

    def test_aggregate_endpoint(self, server, ex4_members):
        body = [m.to_dict() for m in ex4_members]
        status, data = request(server, "POST", "/api/aggregate", body)
        assert status == 200
        out = json.loads(data)
        assert out["pcs"]["bestToOther"][1] == pytest.approx(3.16228, abs=1e-4)
        assert out["report"]["cr"] == pytest.approx(0.1471, abs=5e-4)

    def test_scales_endpoint(self, server):
        status, data = request(server, "GET", "/api/scales")
        assert status == 200
        scales = {s["id"]: s for s in json.loads(data)["scales"]}
        assert set(scales) == {"saaty", "salo", "lootsma", "ddm7"}
        assert scales["saaty"]["levels"][0] == {"term": "Indifference", "value": 1}
        assert scales["saaty"]["maxValue"] == 9

    def test_ci_endpoint(self, server):
        status, data = request(server, "GET", "/api/ci?scale=saaty")
        assert status == 200
        rows = json.loads(data)["rows"]
        assert rows[-1][0] == 9 and rows[-1][1] == pytest.approx(5.228, abs=5e-4)
        status, _ = request(server, "GET", "/api/ci?scale=unknown")
        assert status == 400

    def test_unknown_endpoint_404(self, server):
        status, _ = request(server, "GET", "/api/nope")
        assert status == 404

    def test_info_page_without_ui(self, server):
        status, data = request(server, "GET", "/")
        assert status == 200
        assert json.loads(data)["service"] == "nlbwm"

    def test_latency_budget(self, ex6_body):
        # n=15 request must stay under 50 ms through the pure handler
        body = {
            "best": [1],
            "worst": [15],
            "bestToOther": [1] + [3] * 13 + [9],
            "otherToWorst": [9] + [3] * 13 + [1],
        }
        start = time.perf_counter()
        status, _ = handle_analyze(body)
        elapsed = time.perf_counter() - start
        assert status == 200
        assert elapsed < 0.05

    def test_cli_and_http_body_identical(self, server, tmp_path, ex6_body, capsys):
        path = tmp_path / "ex6.json"
        path.write_text(json.dumps(ex6_body))
        assert main(["analyze", str(path)]) == 0
        cli_out = capsys.readouterr().out
        status, http_out = request(server, "POST", "/api/analyze", ex6_body)
        assert status == 200
        assert cli_out.rstrip("\n") == http_out


class TestStaticUi:
    def test_serves_bundle(self, tmp_path):
        (tmp_path / "index.html").write_text("<html>weights</html>")
        (tmp_path / "app.js").write_text("console.log(1)")
        httpd = make_server(port=0, ui_dir=tmp_path)
        thread = threading.Thread(target=httpd.serve_forever, daemon=True)
        thread.start()
        try:
            status, data = request(httpd, "GET", "/")
            assert status == 200 and "weights" in data
            status, _ = request(httpd, "GET", "/app.js")
            assert status == 200
            status, data = request(httpd, "GET", "/missing-page")
            assert status == 200 and "weights" in data  # SPA fallback
            status, _ = request(httpd, "GET", "/../etc/passwd")
            assert status in (200, 403)  # normalized or refused, never escapes
        finally:
            httpd.shutdown()
            httpd.server_close()
