"""Regenerate schemas/openapi.json from the live app surface."""

import json
import tempfile
from pathlib import Path

from airviz.api import create_app
from airviz.store import Store


def main():
    with tempfile.TemporaryDirectory() as tmp:
        store_path = Path(tmp) / "empty.db"
        Store(store_path).close()
        app = create_app(store_path)
        doc = app.openapi()
    out = Path(__file__).resolve().parent.parent / "schemas" / "openapi.json"
    out.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", "utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
