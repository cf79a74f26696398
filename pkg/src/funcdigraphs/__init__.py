"""Exhaustive, isomorphism-free generation of functional digraphs.

Functional digraphs (digraphs with uniform outdegree 1, equivalently finite
endofunctions) are encoded by integer-sequence isomorphism codes; successor
algorithms enumerate all codes of a given size with polynomial delay. The
package also canonicalizes explicit function tables, tests isomorphism, and
ships a brute-force oracle for verification at small sizes.
"""

from .canon import (
    FunctionTable,
    canonicalize,
    component_code_of,
    decompose,
    isomorphic,
    tree_code_of,
)
from .components import (
    ComponentCode,
    ComponentSuccessor,
    component_size,
    compare_components,
    cunmerge,
    cycle,
    generate_components,
    is_canonical,
    merges,
    successor_component,
)
from .digraphs import (
    EMPTY_DIGRAPH,
    DigraphCode,
    compare_digraphs,
    digraph_size,
    generate_digraphs,
    generation_rank,
    partition_of,
    successor_digraph,
)
from .oracle import ORACLE_MAX_N, classify, enumerate_tables, realize
from .partitions import (
    Partition,
    first_partition,
    next_partition_same_n,
    successor_partition,
)
from .trees import (
    TRIVIAL_TREE,
    TreeCode,
    compare_trees,
    is_valid_tree_code,
    merge,
    subtrees,
    tree_size,
    unmerge,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentCode",
    "ComponentSuccessor",
    "DigraphCode",
    "EMPTY_DIGRAPH",
    "FunctionTable",
    "ORACLE_MAX_N",
    "Partition",
    "TRIVIAL_TREE",
    "TreeCode",
    "canonicalize",
    "classify",
    "compare_components",
    "compare_digraphs",
    "compare_trees",
    "component_code_of",
    "component_size",
    "cunmerge",
    "cycle",
    "decompose",
    "digraph_size",
    "enumerate_tables",
    "first_partition",
    "generate_components",
    "generate_digraphs",
    "generation_rank",
    "is_canonical",
    "is_valid_tree_code",
    "isomorphic",
    "merge",
    "merges",
    "next_partition_same_n",
    "partition_of",
    "realize",
    "subtrees",
    "successor_component",
    "successor_digraph",
    "successor_partition",
    "tree_code_of",
    "tree_size",
    "unmerge",
]
