from dataclasses import dataclass

from fnlab.helpers.errors import SizeLimitExceeded


@dataclass(frozen=True)
class Limits:
    """Resource caps for the finite constructions.

    max_arity: largest n for a single Fr(n) element (truth table of 2^n entries)
    max_subalgebra: largest materialized subalgebra (members)
    max_family: largest family handed to the independence test
    max_synth: largest structure accepted by the minimal-mapping search
    max_engelking_support: largest Y' accepted by the Engelking witness check
    max_exhaustive_support: largest generator set whose free algebra is enumerated exhaustively
    engelking_samples: random candidates drawn when enumeration is not exhaustive
    """

    max_arity: int = 24
    max_subalgebra: int = 2**16
    max_family: int = 20
    max_synth: int = 24
    max_engelking_support: int = 8
    max_exhaustive_support: int = 4
    engelking_samples: int = 2000

    def check_arity(self, n: int) -> None:
        """Reject an arity outside the configured range.

        :raises SizeLimitExceeded: If n is negative or above max_arity
        """
        if not 0 <= n <= self.max_arity:
            raise SizeLimitExceeded(f"Arity must be between 0 and {self.max_arity}, got {n}")


DEFAULT_LIMITS = Limits()
