"""
Chain posets and subdivisions of the triangulation.

Responsibilities
  - Enumerate the chains of the atlas (the poset B Sigma).
  - List dual-cell boundaries.
  - Enumerate barycentric chains, the pairs subdivision P Sigma and the pairs
    barycentric subdivision PB Sigma, with dimensions and face posets.

Usage Context
  - Every per-chain check iterates over enumerate_chains(); the annuli
    combinatorics and the CLI `annuli cells` command use the PB Sigma cells.

Limitations
  - Chains are restricted to simplices of the given triangulation.
"""
# 说明：链偏序 BΣ、对偶胞腔边界、配对剖分 PΣ 与配对重心剖分 PBΣ 的枚举。
# 职责：
# - enumerate_chains：长度不超过 max_len 的所有链，按 (长度, 字典序) 排序
# - dual_cell_boundary：I 的所有长度加一的上链
# - barycentric_chains：严格嵌套的链序列 vI
# - PairsBarycentricCell / pairs_barycentric_cells：胞腔 σ_{vI⊂vJ}，维数 |vJ| − |vI|
# - pbs_face_poset：以 networkx.DiGraph 表示的面偏序（边为覆盖关系）
# 约定：
# - vI 非空；面关系 σ_{vI⊂vJ} ≤ σ_{vI'⊂vJ'} 当且仅当 vI' ⊆ vI ⊆ vJ ⊆ vJ'

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from mirlib.core.utils.logging import format_chain

if TYPE_CHECKING:  # pragma: no cover
    from mirlib.core.affine.atlas import ChartAtlas

Chain = Tuple[int, ...]
BarycentricChain = Tuple[Chain, ...]


def chain_key(chain: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    return (len(chain), tuple(chain))


def enumerate_chains(atlas: "ChartAtlas", max_len: int) -> List[Chain]:
    """All chains of length <= max_len contained in a simplex, sorted by (length, lexicographic)."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    found = {(v,) for v in atlas.vertex_ids}
    for simplex in atlas.simplices:
        for size in range(2, min(max_len, len(simplex)) + 1):
            found.update(itertools.combinations(simplex, size))
    return sorted((c for c in found if len(c) <= max_len), key=chain_key)


def dual_cell_boundary(atlas: "ChartAtlas", chain: Sequence[int]) -> List[Chain]:
    """Chains J containing I with |J| = |I| + 1."""
    chain = tuple(chain)
    members = set(chain)
    out = []
    for candidate in atlas.chains(len(chain) + 1):
        if len(candidate) == len(chain) + 1 and members <= set(candidate):
            out.append(candidate)
    return out


def sub_chains(chain: Sequence[int]) -> List[Chain]:
    # 链的所有非空子链
    chain = tuple(chain)
    out = []
    for size in range(1, len(chain) + 1):
        out.extend(itertools.combinations(chain, size))
    return out


def format_barycentric(flag: Sequence[Sequence[int]]) -> str:
    return "(" + "⊂".join(format_chain(c) for c in flag) + ")"


def _extend_flags(prefix: BarycentricChain, chains: Sequence[Chain]) -> Iterator[BarycentricChain]:
    yield prefix
    last = set(prefix[-1])
    for chain in chains:
        if last < set(chain):
            yield from _extend_flags(prefix + (chain,), chains)


def barycentric_chains(atlas: "ChartAtlas") -> List[BarycentricChain]:
    """Every strictly nested sequence of chains, ordered by length then members."""
    chains = atlas.chains()
    flags = []
    for chain in chains:
        flags.extend(_extend_flags((chain,), chains))
    return sorted(set(flags), key=lambda f: (len(f), [chain_key(c) for c in f]))


def maximal_flags(atlas: "ChartAtlas") -> List[BarycentricChain]:
    flags = barycentric_chains(atlas)
    members = [set(f) for f in flags]
    return [f for f, m in zip(flags, members) if not any(m < other for other in members)]


@dataclass(frozen=True)
class PairsBarycentricCell:
    """
    Cell sigma_{vI in vJ} of the pairs barycentric subdivision.

    - Configuration
      - inner: the flag vI (nonempty).
      - outer: the flag vJ, containing every member of vI.

    - Behavior
      - dimension = |vJ| - |vI|; coordinates are indexed by vJ minus vI.
    """

    inner: BarycentricChain
    outer: BarycentricChain

    def __post_init__(self) -> None:
        if not self.inner:
            raise ValueError("inner flag must be nonempty")
        if not set(self.inner) <= set(self.outer):
            raise ValueError("inner flag must be contained in the outer flag")

    @property
    def dimension(self) -> int:
        return len(self.outer) - len(self.inner)

    @property
    def coordinates(self) -> Tuple[Chain, ...]:
        return tuple(c for c in self.outer if c not in self.inner)

    def is_face_of(self, other: "PairsBarycentricCell") -> bool:
        return set(other.inner) <= set(self.inner) and set(self.outer) <= set(other.outer)

    def label(self) -> str:
        return f"{format_barycentric(self.inner)}⊂{format_barycentric(self.outer)}"

    def to_dict(self) -> Dict[str, object]:
        return {
            "inner": [list(c) for c in self.inner],
            "outer": [list(c) for c in self.outer],
            "dimension": self.dimension,
        }


def _subflags(flag: BarycentricChain) -> List[BarycentricChain]:
    out = []
    for size in range(1, len(flag) + 1):
        out.extend(itertools.combinations(flag, size))
    return out


def pairs_barycentric_cells(atlas: "ChartAtlas") -> List[PairsBarycentricCell]:
    """Every pair vI within vJ of barycentric chains, vI nonempty."""
    cells = set()
    for outer in barycentric_chains(atlas):
        for inner in _subflags(outer):
            cells.add(PairsBarycentricCell(inner=inner, outer=outer))
    return sorted(
        cells,
        key=lambda c: (c.dimension, [chain_key(x) for x in c.outer], [chain_key(x) for x in c.inner]),
    )


def pairs_cells(atlas: "ChartAtlas") -> List[Tuple[Chain, Chain]]:
    """Cells of the pairs subdivision: chains I within J, dimension |J| - |I|."""
    chains = atlas.chains()
    return [(i, j) for j in chains for i in sub_chains(j)]


def pbs_face_poset(cells: Sequence[PairsBarycentricCell]) -> nx.DiGraph:
    """Hasse diagram of the face order, edges pointing from a face to the cells covering it."""
    graph = nx.DiGraph()
    for cell in cells:
        graph.add_node(cell, dim=cell.dimension, label=cell.label())
    by_dim: Dict[int, List[PairsBarycentricCell]] = {}
    for cell in cells:
        by_dim.setdefault(cell.dimension, []).append(cell)
    for dim, lower in by_dim.items():
        for face in lower:
            for cell in by_dim.get(dim + 1, []):
                if face.is_face_of(cell):
                    graph.add_edge(face, cell)
    return graph


def top_cell_count(atlas: "ChartAtlas") -> int:
    # (极大链的个数) × (链长)，作为 PBΣ 顶维胞腔数的独立计数
    flags = maximal_flags(atlas)
    return sum(len(f) for f in flags)
