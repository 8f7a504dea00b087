"""Local HTTP binding of the game protocol, plus static playground hosting.

POST /api takes exactly the same JSON bodies as the stdio protocol and
returns the same responses.  GET serves the built playground (when a UI
directory is configured) and the bundled example gallery under
/examples/.  This is a development server for playing on localhost, not a
hardened deployment target.
"""

from __future__ import annotations

import json
import threading
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import corpus
from .engine import GameEngine
from .jsonio import dumps

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".png": "image/png",
}


def make_server(host: str, port: int, ui_dir: str | None = None) -> ThreadingHTTPServer:
    engine = GameEngine()
    ui_root = Path(ui_dir).resolve() if ui_dir else None

    class Handler(BaseHTTPRequestHandler):
        server_version = "chipfire"

        def log_message(self, *args):  # quiet by default
            pass

        def _send(self, code, body: bytes, content_type: str):
            self.send_response(code)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _send_json(self, payload, code=HTTPStatus.OK):
            self._send(code, dumps(payload).encode(), "application/json")

        def do_OPTIONS(self):
            self.send_response(HTTPStatus.NO_CONTENT)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()

        def do_POST(self):
            if self.path.rstrip("/") != "/api":
                self._send_json({"error": "POST /api only"}, HTTPStatus.NOT_FOUND)
                return
            try:
                length = int(self.headers.get("Content-Length", "0"))
                request = json.loads(self.rfile.read(length) or b"{}")
            except (ValueError, json.JSONDecodeError):
                self._send_json({"error": "bad json"}, HTTPStatus.BAD_REQUEST)
                return
            self._send_json(engine.handle_safe(request))

        def do_GET(self):
            path = self.path.split("?", 1)[0]
            if path == "/examples" or path == "/examples/":
                self._send_json({"examples": corpus.names()})
                return
            if path.startswith("/examples/"):
                name = path[len("/examples/") :].removesuffix(".json")
                if name in corpus.names():
                    self._send_json(corpus.document_as_json(name))
                else:
                    self._send_json({"error": f"unknown example {name}"},
                                    HTTPStatus.NOT_FOUND)
                return
            if ui_root is None:
                self._send_json({"error": "no ui directory configured"},
                                HTTPStatus.NOT_FOUND)
                return
            rel = path.lstrip("/") or "index.html"
            target = (ui_root / rel).resolve()
            if not str(target).startswith(str(ui_root)) or not target.is_file():
                self._send(HTTPStatus.NOT_FOUND, b"not found", "text/plain")
                return
            ctype = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
            self._send(HTTPStatus.OK, target.read_bytes(), ctype)

    return ThreadingHTTPServer((host, port), Handler)


def serve_http(host: str, port: int, ui_dir: str | None = None, *, ready=None):
    server = make_server(host, port, ui_dir)
    if ready is not None:
        ready(server)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


def start_background(host: str, port: int, ui_dir: str | None = None):
    """Start the server on a daemon thread; returns (server, thread)."""
    server = make_server(host, port, ui_dir)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, thread
