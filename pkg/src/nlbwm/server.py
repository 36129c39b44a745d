"""HTTP service: analysis endpoints plus static hosting for the built UI.

Stateless by design; every request is a pure function of its body, so the
threaded stdlib server is sufficient. Routes:

    POST /api/analyze     AnalyzeRequest (or bare PCS JSON) -> AnalysisReport
    POST /api/aggregate   list of PCS JSON -> {"pcs": ..., "report": ...}
    GET  /api/scales      built-in scale definitions
    GET  /api/ci?scale=x  consistency index table for one scale
    GET  /<path>          files from the UI bundle directory, when configured
"""

from __future__ import annotations

import json
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any
from urllib.parse import parse_qs, urlparse

from .analysis import verify_against_oracle
from .consistency import ci_table
from .errors import BwmError, RoleConflictError, RoleEntryError
from .scales import SCALES, get_scale
from .wire import analyze_payload, error_payload, pcs_from_payload, report_json

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".map": "application/json",
    ".ico": "image/x-icon",
}

JSON_TYPE = "application/json"


def _status_for(exc: Exception) -> int:
    if isinstance(exc, (RoleConflictError, RoleEntryError)):
        return 422
    return 400


def _split_request(payload: Any) -> tuple[Any, dict]:
    """Accept either an {"pcs": ..., "options": ...} envelope or a bare PCS."""
    if isinstance(payload, dict) and "pcs" in payload:
        options = payload.get("options") or {}
        if not isinstance(options, dict):
            raise BwmError("options must be an object")
        return payload["pcs"], options
    return payload, {}


def handle_analyze(payload: Any) -> tuple[int, str]:
    """Pure request handler; returns (status, body)."""
    try:
        pcs_payload, options = _split_request(payload)
        round_digits = options.get("round")
        if round_digits is not None and not isinstance(round_digits, int):
            raise BwmError("options.round must be an integer")
        report, body = analyze_payload(
            pcs_payload, legacy=bool(options.get("legacy")), round_digits=round_digits
        )
        if options.get("verify"):
            outcome = verify_against_oracle(report.pcs)
            if not outcome["ok"]:
                return 500, json.dumps({"error": "analytic/oracle mismatch", "detail": outcome})
        return 200, body
    except BwmError as exc:
        return _status_for(exc), json.dumps(error_payload(exc))


def handle_aggregate(payload: Any) -> tuple[int, str]:
    try:
        pcs_payload, options = _split_request(payload)
        if not isinstance(pcs_payload, list):
            raise BwmError("aggregate expects a list of comparison systems")
        merged = pcs_from_payload(pcs_payload)
        report, body = analyze_payload(
            merged.to_dict(),
            legacy=bool(options.get("legacy")),
            round_digits=options.get("round"),
        )
        envelope = {"pcs": merged.to_dict(), "report": json.loads(body)}
        return 200, json.dumps(envelope, indent=2)
    except BwmError as exc:
        return _status_for(exc), json.dumps(error_payload(exc))


def handle_scales() -> tuple[int, str]:
    return 200, json.dumps({"scales": [s.to_dict() for s in SCALES.values()]})


def handle_ci(scale_name: str) -> tuple[int, str]:
    try:
        scale = get_scale(scale_name)
    except BwmError as exc:
        return 400, json.dumps(error_payload(exc))
    rows = [[abw, ci] for abw, ci in ci_table(scale)]
    return 200, json.dumps({"scale": scale.name, "rows": rows})


def default_ui_dir() -> Path | None:
    env = os.environ.get("NLBWM_UI_DIR")
    if env:
        return Path(env)
    local = Path.cwd() / "frontend" / "dist"
    return local if local.is_dir() else None


class _Handler(BaseHTTPRequestHandler):
    ui_dir: Path | None = None

    def log_message(self, *args):  # quiet by default
        pass

    def _respond(self, status: int, body: str | bytes, content_type: str = JSON_TYPE) -> None:
        data = body.encode("utf-8") if isinstance(body, str) else body
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def _read_json(self) -> Any:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        return json.loads(raw.decode("utf-8"))

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_POST(self):
        path = urlparse(self.path).path
        try:
            payload = self._read_json()
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            self._respond(400, json.dumps(error_payload(exc)))
            return
        if path == "/api/analyze":
            status, body = handle_analyze(payload)
        elif path == "/api/aggregate":
            status, body = handle_aggregate(payload)
        else:
            status, body = 404, json.dumps({"error": f"unknown endpoint {path}"})
        self._respond(status, body)

    def do_GET(self):
        parsed = urlparse(self.path)
        if parsed.path == "/api/scales":
            status, body = handle_scales()
            self._respond(status, body)
            return
        if parsed.path == "/api/ci":
            scale = (parse_qs(parsed.query).get("scale") or [""])[0]
            status, body = handle_ci(scale)
            self._respond(status, body)
            return
        if parsed.path.startswith("/api/"):
            self._respond(404, json.dumps({"error": f"unknown endpoint {parsed.path}"}))
            return
        self._serve_static(parsed.path)

    def _serve_static(self, path: str) -> None:
        if self.ui_dir is None:
            info = {
                "service": "nlbwm",
                "endpoints": ["/api/analyze", "/api/aggregate", "/api/scales", "/api/ci?scale="],
                "ui": "not built",
            }
            self._respond(200, json.dumps(info))
            return
        rel = path.lstrip("/") or "index.html"
        target = (self.ui_dir / rel).resolve()
        root = self.ui_dir.resolve()
        if root not in target.parents and target != root:
            self._respond(403, json.dumps({"error": "forbidden"}))
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            # single-page app fallback
            target = root / "index.html"
            if not target.is_file():
                self._respond(404, json.dumps({"error": "not found"}))
                return
        ctype = _CONTENT_TYPES.get(target.suffix.lower(), "application/octet-stream")
        self._respond(200, target.read_bytes(), ctype)


#: Sentinel: look for the built UI bundle in the usual places.
AUTO_UI = "auto"


def make_server(host: str = "127.0.0.1", port: int = 0, ui_dir: str | os.PathLike | None = AUTO_UI):
    """Build (without starting) the threaded HTTP server.

    ``ui_dir=AUTO_UI`` probes NLBWM_UI_DIR and ./frontend/dist; ``None``
    disables static hosting entirely (the root then serves an info page).
    """
    handler = type("BoundHandler", (_Handler,), {})
    if ui_dir == AUTO_UI:
        handler.ui_dir = default_ui_dir()
    else:
        handler.ui_dir = Path(ui_dir) if ui_dir is not None else None
    return ThreadingHTTPServer((host, port), handler)


def run_server(host: str = "127.0.0.1", port: int = 8080, ui_dir=AUTO_UI) -> None:
    httpd = make_server(host, port, ui_dir)
    where = f"http://{host}:{httpd.server_port}"
    print(f"nlbwm service listening on {where}")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
