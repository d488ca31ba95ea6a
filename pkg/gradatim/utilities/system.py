"""# gradatim.utilities.system

Utility functions for seeding & random number generation.
"""

__all__ =   [
                "make_generator",
                "spawn_generators",
            ]

from typing         import List

from numpy.random   import default_rng, Generator, SeedSequence


def make_generator(
    seed:   int
) -> Generator:
    """# Make Random Number Generator.

    ## Args:
        * seed  (int):  Random number generation seed.

    ## Returns:
        * Generator:    Independent NumPy generator.
    """
    return default_rng(seed)


def spawn_generators(
    seed:   int,
    count:  int
) -> List[Generator]:
    """# Spawn Independent Generators.

    Each stream is derived from the same root seed, so adding consumers to one stream never shifts 
    the draws of another.

    ## Args:
        * seed  (int):  Root random number generation seed.
        * count (int):  Number of independent streams.

    ## Returns:
        * List[Generator]:  Generators, one per stream.
    """
    return [default_rng(child) for child in SeedSequence(seed).spawn(count)]
