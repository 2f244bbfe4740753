"""Regenerate the shipped structure files from the Python builders."""

from pathlib import Path

from lrsmash.fileformat import StructureFile
from lrsmash.fixtures import fixture_library

OUT = Path(__file__).resolve().parents[1] / "src" / "lrsmash" / "data"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for stem, (field, items) in fixture_library().items():
        text = StructureFile.from_objects(field, items).to_text()
        (OUT / f"{stem}.lrs").write_text(text, encoding="utf-8")
        print(f"wrote {stem}.lrs")


if __name__ == "__main__":
    main()
