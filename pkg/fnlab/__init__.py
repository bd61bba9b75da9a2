from fnlab.algebra.free import FreeBAElement, craig_interpolant
from fnlab.algebra.subalgebra import FiniteBooleanAlgebra, FreeAlgebra, is_independent
from fnlab.constructions.engelking import engelking_member, engelking_witness_check
from fnlab.constructions.independence import extract_independent
from fnlab.game import GameConfig, play
from fnlab.intervals.algebra import IntervalAlgebra, dense_wfn_mapping, lift_mapping, project_mapping
from fnlab.intervals.linear_order import LinearOrder
from fnlab.mapping.fn_mapping import FnMapping, WitnessFamily, interpolation_fn_mapping, verify_star
from fnlab.mapping.synthesis import synth_min_fn
from fnlab.order.poset import Poset, build_poset
from fnlab.substructure import k_substructure_witness
from fnlab.sweep import ParameterSet, ParameterSweep, SweepRunner

__version__ = "0.1.0"
