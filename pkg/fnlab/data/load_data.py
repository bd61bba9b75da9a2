from pathlib import Path
from typing import Dict

PATH = Path(__file__).parent / "structures"

SUFFIXES = (".pos", ".alg", ".lin")


def get_bundled_texts(suffix: str) -> Dict[str, str]:
    """Load every bundled fixture with a suffix.

    :param suffix: .pos, .alg or .lin
    :return: Name (file stem) to contents
    """
    assert suffix in SUFFIXES, f"Suffix must be one of {SUFFIXES}"
    return {pth.stem: pth.read_text() for pth in sorted(PATH.glob(f"*{suffix}"))}
