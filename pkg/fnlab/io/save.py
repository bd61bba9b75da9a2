# coding=UTF-8
"""Write structures, mappings and reports in the text formats read by fnlab.io.load.

Human output is plain lines; tables go through pandas with a fixed separator and line terminator so that tsv output
is byte-stable for equal inputs.
"""
from pathlib import Path
from typing import Iterable

import pandas as pd

from fnlab.game import GameTranscript
from fnlab.helpers.type_helpers import Counterexample, Refutation
from fnlab.mapping.fn_mapping import FnMapping, WitnessFamily
from fnlab.order.poset import Element, OrderedStructure, Poset


def format_items(structure: OrderedStructure, items: Iterable[Element]) -> str:
    """Element list in canonical order: ids joined by spaces, expressions by commas."""
    joiner = ", " if structure.is_boolean_algebra else " "
    return joiner.join(structure.labels(items))


def format_poset(poset: Poset) -> str:
    """Poset format with covering pairs only."""
    lines = ["poset"]
    lines.extend(f"elem {a}" for a in poset.elements)
    lines.extend(f"le {a} {b}" for a, b in poset.covers())
    return "\n".join(lines) + "\n"


def format_mapping(f: FnMapping) -> str:
    """Mapping format (intensional mappings are written out over their carrier)."""
    f = f.materialize()
    carrier = f.carrier
    lines = [f"fnmap k={f.bound_label()}"]
    lines.extend(f"map {carrier.label(a)} : {format_items(carrier, f(a))}".rstrip() for a in carrier.elements)
    return "\n".join(lines) + "\n"


def format_witness(family: WitnessFamily) -> str:
    """One wit line per ambient element, each side written when the family has it."""
    ambient = family.ambient
    lines = []
    for b in ambient.elements:
        parts = [f"wit {ambient.label(b)}"]
        if family.has_lower:
            parts.append(f"U: {format_items(ambient, family.lower(b))}".rstrip())
        if family.has_upper:
            parts.append(f"V: {format_items(ambient, family.upper(b))}".rstrip())
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def format_counterexample(structure: OrderedStructure, counterexample: Counterexample) -> str:
    """counterexample: a b."""
    return f"counterexample: {structure.label(counterexample.a)} {structure.label(counterexample.b)}"


def format_refutation(structure: OrderedStructure, refutation: Refutation) -> str:
    """refutation: <b> <cone> <size> (the element is - when the union is not closed)."""
    element = "-" if refutation.element is None else structure.label(refutation.element)
    return f"refutation: {element} {refutation.cone} {refutation.size}"


def format_transcript(transcript: GameTranscript) -> str:
    """One line per half move, the verdict and its witness or refutation."""
    structure = transcript.config.structure
    lines = [f"{m.player}: {format_items(structure, m.accumulated)}".rstrip() for m in transcript.moves]
    lines.append(f"verdict: {'win' if transcript.won else 'lose'}")
    if transcript.won:
        lines.append(format_witness(transcript.verdict).rstrip("\n"))
    else:
        lines.append(format_refutation(structure, transcript.verdict))
    return "\n".join(lines) + "\n"


def mapping_frame(f: FnMapping) -> pd.DataFrame:
    """Table of a mapping: element, values, size."""
    f = f.materialize()
    carrier = f.carrier
    return pd.DataFrame(
        {
            "element": [carrier.label(a) for a in carrier.elements],
            "values": [format_items(carrier, f(a)) for a in carrier.elements],
            "size": [len(f(a)) for a in carrier.elements],
        }
    )


def witness_frame(family: WitnessFamily) -> pd.DataFrame:
    """Table of a witness family: element, U, V (empty cells for a missing side)."""
    ambient = family.ambient
    return pd.DataFrame(
        {
            "element": [ambient.label(b) for b in ambient.elements],
            "U": [format_items(ambient, family.lower(b)) if family.has_lower else "" for b in ambient.elements],
            "V": [format_items(ambient, family.upper(b)) if family.has_upper else "" for b in ambient.elements],
        }
    )


def to_tsv(frame: pd.DataFrame) -> str:
    """Byte-stable tab separated text."""
    return frame.to_csv(sep="\t", index=False, lineterminator="\n")


def save_text(path: Path, text: str) -> None:
    """Write text, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
