"""In-process stub generator server for tests and demos.

Speaks the remote-generator wire protocol (POST /v1/generate) and records
every request body it receives.  Configurable to return canned texts, an
arbitrary status code, or a malformed body, so client error handling can be
exercised end to end without any real model server.
"""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Sequence


class StubGeneratorServer:
    def __init__(
        self,
        texts: Sequence[str] = (),
        *,
        status: int = 200,
        raw_body: bytes | None = None,
        host: str = "127.0.0.1",
        port: int = 0,
    ):
        self.texts = list(texts)
        self.status = status
        self.raw_body = raw_body
        self.requests: list[dict] = []

        stub = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):  # noqa: N802 (http.server API)
                if self.path != "/v1/generate":
                    self.send_error(404)
                    return
                length = int(self.headers.get("Content-Length", 0))
                raw = self.rfile.read(length)
                try:
                    stub.requests.append(json.loads(raw))
                except ValueError:
                    stub.requests.append({"_raw": raw.decode("utf-8", "replace")})
                if stub.raw_body is not None:
                    body = stub.raw_body
                else:
                    body = json.dumps({"texts": stub.texts}).encode("utf-8")
                self.send_response(stub.status)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(body)))
                self.end_headers()
                self.wfile.write(body)

            def log_message(self, *args):  # silence test output
                pass

        self._server = ThreadingHTTPServer((host, port), Handler)
        self._thread = threading.Thread(target=self._server.serve_forever, daemon=True)

    @property
    def base_url(self) -> str:
        host, port = self._server.server_address[:2]
        return f"http://{host}:{port}"

    def start(self) -> StubGeneratorServer:
        self._thread.start()
        return self

    def stop(self) -> None:
        self._server.shutdown()
        self._server.server_close()

    def __enter__(self) -> StubGeneratorServer:
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()
