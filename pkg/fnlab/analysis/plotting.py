"""Plotting module for wrapping matplotlib with fnlab structures.

Hasse diagrams are drawn level by level (level = length of the longest chain below an element)
Interval elements are drawn as horizontal bars over the positions of a finite order or over rational coordinates
"""
from inspect import signature
from typing import Any, Dict, Iterable, List, Optional, Tuple

import matplotlib as mpl
import matplotlib.lines
import matplotlib.pyplot as plt
import numpy as np

from fnlab.game import GameTranscript
from fnlab.intervals.element import IntervalElement
from fnlab.intervals.linear_order import Sentinel
from fnlab.order.poset import Element, OrderedStructure


def split_mpl_kwargs(tainted: Dict[str, Any]) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    """Split kwargs into valid mpl kwargs and internal fnlab kwargs.

    Valid keys are determined by inclusion in the Line2D signature which should contain most common ones

    :param tainted: kwarg dictionary containing the mixture of kwargs
    :returns: Matplotlib kwargs and fnlab kwargs dictionaries
    """
    valid_kwargs = set(signature(mpl.lines.Line2D).parameters.keys())
    mpl_kwargs = {k: v for k, v in tainted.items() if k in valid_kwargs}
    fnlab_kwargs = {k: v for k, v in tainted.items() if k not in valid_kwargs}
    return mpl_kwargs, fnlab_kwargs


def cover_matrix(structure: OrderedStructure) -> np.ndarray:
    """cover[i, j] iff element i is covered by element j."""
    strict = structure.le_matrix & ~np.eye(len(structure), dtype=bool)
    through = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    return strict & ~through


def hasse_levels(structure: OrderedStructure) -> np.ndarray:
    """Length of the longest chain below each element."""
    strict = structure.le_matrix & ~np.eye(len(structure), dtype=bool)
    levels = np.zeros(len(structure), dtype=int)
    for j in np.argsort(strict.sum(axis=0), kind="stable"):
        below = np.nonzero(strict[:, j])[0]
        if below.size:
            levels[j] = levels[below].max() + 1
    return levels


def hasse_layout(structure: OrderedStructure) -> Dict[Element, Tuple[float, float]]:
    """Positions (x, level) with each level centred on 0 in canonical order."""
    levels = hasse_levels(structure)
    positions = {}
    for level in np.unique(levels):
        members = np.nonzero(levels == level)[0]
        offsets = np.arange(len(members)) - (len(members) - 1) / 2
        for ix, x in zip(members, offsets):
            positions[structure.elements[ix]] = (float(x), float(level))
    return positions


def plot_hasse(
    structure: OrderedStructure,
    highlight: Optional[Iterable[Element]] = None,
    ax: Optional[plt.Axes] = None,
    **kwargs,
) -> plt.Axes:
    """Draw the Hasse diagram, marking the highlighted elements.

    :param structure: Finite structure
    :param highlight: Elements drawn in the highlight colour (a subset A, or a value set f(a))
    :param ax: Axes to draw on (new figure when None)
    :param kwargs: Line2D kwargs for the edges, plus highlight_color
    """
    mpl_kwargs, own = split_mpl_kwargs(kwargs)
    mpl_kwargs.setdefault("color", "0.5")
    highlight_color = own.get("highlight_color", "C3")
    highlight = frozenset(highlight or ())
    ax = ax or plt.gca()

    positions = hasse_layout(structure)
    covers = cover_matrix(structure)
    for i, j in zip(*np.nonzero(covers)):
        (x0, y0), (x1, y1) = positions[structure.elements[i]], positions[structure.elements[j]]
        ax.plot([x0, x1], [y0, y1], zorder=1, **mpl_kwargs)
    for a, (x, y) in positions.items():
        ax.scatter([x], [y], color=highlight_color if a in highlight else "C0", zorder=2)
        ax.annotate(structure.label(a), (x, y), textcoords="offset points", xytext=(6, 4))
    ax.set_axis_off()
    return ax


def _coordinates(element: IntervalElement) -> List[Tuple[float, float]]:
    order = element.order
    finite = order.is_finite
    low = -1.0 if finite else None
    high = float(len(order)) if finite else None

    def coordinate(point) -> float:
        if isinstance(point, Sentinel):
            if finite:
                return low if point.sign < 0 else high
            return -np.inf if point.sign < 0 else np.inf
        return float(order.key(point))

    return [(coordinate(lo), coordinate(hi)) for lo, hi in element.intervals()]


def plot_interval_element(element: IntervalElement, y: float = 0.0, ax: Optional[plt.Axes] = None, **kwargs):
    """Draw the intervals of an element as bars at height y (infinite ends are clipped to the view).

    :param element: Interval element
    :param y: Height of the bars
    :param ax: Axes to draw on
    :param kwargs: Line2D kwargs
    """
    mpl_kwargs, _ = split_mpl_kwargs(kwargs)
    mpl_kwargs.setdefault("linewidth", 4)
    ax = ax or plt.gca()
    pieces = _coordinates(element)
    finite = [x for piece in pieces for x in piece if np.isfinite(x)] or [0.0]
    pad = max(1.0, (max(finite) - min(finite)) / 4)
    for lo, hi in pieces:
        lo = lo if np.isfinite(lo) else min(finite) - pad
        hi = hi if np.isfinite(hi) else max(finite) + pad
        ax.plot([lo, hi], [y, y], solid_capstyle="butt", **mpl_kwargs)
        ax.plot([lo], [y], marker="|", color="k")
    if element.order.is_finite:
        ax.set_xticks(range(len(element.order)))
        ax.set_xticklabels(element.order.points)
    return ax


def plot_transcript(transcript: GameTranscript, ax: Optional[plt.Axes] = None, **kwargs) -> plt.Axes:
    """Size of the accumulated set after every half move."""
    mpl_kwargs, _ = split_mpl_kwargs(kwargs)
    mpl_kwargs.setdefault("marker", "o")
    ax = ax or plt.gca()
    frame = transcript.to_frame()
    ax.plot(np.arange(len(frame)), frame["size"], **mpl_kwargs)
    ax.axhline(transcript.config.move_bound, color="0.5", linestyle="--")
    ax.set_xlabel("half move")
    ax.set_ylabel("accumulated size")
    return ax
