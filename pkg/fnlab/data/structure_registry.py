from typing import Dict

from fnlab.algebra.subalgebra import FiniteBooleanAlgebra
from fnlab.data.load_data import get_bundled_texts
from fnlab.intervals.linear_order import LinearOrder
from fnlab.io.load import parse_algebra, parse_linear_order, parse_poset
from fnlab.order.poset import OrderedStructure, chain


class StructureRegistry(dict):
    """Custom WORM dictionary."""

    def __getitem__(self, item: str):
        return super().__getitem__(item.lower())

    def __contains__(self, item) -> bool:
        return super().__contains__(item.lower()) if isinstance(item, str) else False

    def __setitem__(self, key, value):
        if key in self:
            raise KeyError(f"Structure {key} already registered")
        super().__setitem__(key.lower(), value)


STRUCTURE_REGISTRY: Dict[str, OrderedStructure] = StructureRegistry()
ORDER_REGISTRY: Dict[str, LinearOrder] = StructureRegistry()


def register_structure(name: str, structure: OrderedStructure):
    STRUCTURE_REGISTRY[name] = structure


def register_order(name: str, order: LinearOrder):
    ORDER_REGISTRY[name] = order
    if order.is_finite:
        register_structure(name, order.to_poset())


for _name, _text in get_bundled_texts(".pos").items():
    register_structure(_name, parse_poset(_text))
for _name, _text in get_bundled_texts(".alg").items():
    register_structure(_name, parse_algebra(_text))
for _name, _text in get_bundled_texts(".lin").items():
    register_order(_name, parse_linear_order(_text))

register_structure("chain10", chain(*(f"c{ix}" for ix in range(10))))
register_structure("chain20", chain(*(f"c{ix:02d}" for ix in range(20))))
register_structure("fr1", FiniteBooleanAlgebra.full(1))
