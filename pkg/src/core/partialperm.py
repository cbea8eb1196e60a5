"""
部分置换
对称逆幺半群 I_n 的元素运算，以及由 I_n 生成的逆子半群
"""
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, FrozenSet, List, Mapping, Sequence, Set, Tuple

from src.core.semigroup import FiniteSemigroup
from src.utils.exceptions import DegreeMismatchError, DegreeTooLargeError, TableParseError
from src.utils.logger import setup_logger

logger = setup_logger("core.partialperm")

# 内部哨兵；文本格式中写作 0
UNDEFINED = -1

MAX_MONOID_DEGREE = 4
MAX_SUBSEMIGROUP_DEGREE = 3
MAX_SUBSEMIGROUP_SIZE = 8


@dataclass(frozen=True)
class PartialPerm:
    """{1..n} 上的部分置换，右作用：点 i 映到 images[i]"""
    degree: int
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if len(images) != self.degree:
            raise DegreeMismatchError(
                f"partial permutation of degree {self.degree} has {len(images)} images"
            )
        defined = [v for v in images if v != UNDEFINED]
        for v in defined:
            if not 0 <= v < self.degree:
                raise DegreeMismatchError(f"image {v + 1} is outside 1..{self.degree}")
        if len(set(defined)) != len(defined):
            raise DegreeMismatchError("partial permutation is not injective on its domain")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_mapping(cls, degree: int, mapping: Mapping[int, int]) -> "PartialPerm":
        """由 1 基的点对构造，例如 {1: 2} 表示 [1↦2]"""
        images = [UNDEFINED] * degree
        for src, dst in mapping.items():
            images[src - 1] = dst - 1
        return cls(degree, tuple(images))

    @classmethod
    def empty(cls, degree: int) -> "PartialPerm":
        return cls(degree, (UNDEFINED,) * degree)

    @classmethod
    def partial_identity(cls, degree: int, points: Sequence[int]) -> "PartialPerm":
        """points 为 1 基"""
        return cls.from_mapping(degree, {p: p for p in points})

    @classmethod
    def from_text(cls, text: str) -> "PartialPerm":
        """解析 `n; i1 i2 ... in`，0 表示未定义"""
        head, sep, body = text.partition(";")
        if not sep:
            raise TableParseError(f"partial permutation must look like 'n; i1 ... in', got '{text}'")
        try:
            degree = int(head.strip())
            values = [int(tok) for tok in body.split()]
        except ValueError as e:
            raise TableParseError(f"non-integer token in partial permutation: {e}") from e
        if len(values) != degree:
            raise TableParseError(f"expected {degree} images, got {len(values)}")
        return cls(degree, tuple(v - 1 if v != 0 else UNDEFINED for v in values))

    def to_text(self) -> str:
        return f"{self.degree}; " + " ".join(str(v + 1) if v != UNDEFINED else "0" for v in self.images)

    def short_label(self) -> str:
        """紧凑标签（无空格，可放入表格文件的 labels 行），例如 20"""
        return "".join(str(v + 1) if v != UNDEFINED else "0" for v in self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    @property
    def domain(self) -> FrozenSet[int]:
        return frozenset(i for i, v in enumerate(self.images) if v != UNDEFINED)

    @property
    def image(self) -> FrozenSet[int]:
        return frozenset(v for v in self.images if v != UNDEFINED)

    @property
    def rank(self) -> int:
        return len(self.domain)

    def restrict(self, points: Sequence[int]) -> "PartialPerm":
        """限制到给定定义域（0 基）"""
        keep = set(points)
        return PartialPerm(
            self.degree,
            tuple(v if i in keep else UNDEFINED for i, v in enumerate(self.images)),
        )

    def __mul__(self, other: "PartialPerm") -> "PartialPerm":
        return compose(self, other)


def compose(f: PartialPerm, g: PartialPerm) -> PartialPerm:
    """从左到右复合：(f·g)(i) = g(f(i))"""
    if f.degree != g.degree:
        raise DegreeMismatchError(f"cannot compose degree {f.degree} with degree {g.degree}")
    return PartialPerm(
        f.degree,
        tuple(g.images[v] if v != UNDEFINED else UNDEFINED for v in f.images),
    )


def invert(f: PartialPerm) -> PartialPerm:
    images = [UNDEFINED] * f.degree
    for i, v in enumerate(f.images):
        if v != UNDEFINED:
            images[v] = i
    return PartialPerm(f.degree, tuple(images))


def is_partial_identity(f: PartialPerm) -> bool:
    return all(v == UNDEFINED or v == i for i, v in enumerate(f.images))


def monoid_elements(n: int) -> List[PartialPerm]:
    """I_n 的全部元素：按秩、定义域、像的字典序"""
    elements = []
    for k in range(n + 1):
        for dom in combinations(range(n), k):
            for img in permutations(range(n), k):
                images = [UNDEFINED] * n
                for src, dst in zip(dom, img):
                    images[src] = dst
                elements.append(PartialPerm(n, tuple(images)))
    return elements


def monoid_In(n: int) -> FiniteSemigroup:
    """对称逆幺半群 I_n 的 Cayley 表，元素带部分置换标签"""
    if n < 1:
        raise DegreeTooLargeError(f"degree must be at least 1, got {n}")
    if n > MAX_MONOID_DEGREE:
        raise DegreeTooLargeError(
            f"symmetric inverse monoid of degree {n} is refused (maximum {MAX_MONOID_DEGREE})"
        )
    elements = monoid_elements(n)
    index: Dict[PartialPerm, int] = {f: i for i, f in enumerate(elements)}
    rows = tuple(
        tuple(index[compose(f, g)] for g in elements)
        for f in elements
    )
    logger.debug(f"Built I_{n} with {len(elements)} elements")
    return FiniteSemigroup(len(elements), rows, tuple(f.short_label() for f in elements))


def _inverse_closure(table: Sequence[Sequence[int]], inverse: Sequence[int],
                     seed: Set[int], limit: int) -> FrozenSet[int]:
    """seed 在乘法与求逆下的闭包；超过 limit 时提前返回"""
    closed = set(seed) | {inverse[x] for x in seed}
    frontier = list(closed)
    while frontier and len(closed) <= limit:
        new: List[int] = []
        members = list(closed)
        for x in frontier:
            for y in members:
                for p in (table[x][y], table[y][x]):
                    if p not in closed:
                        closed.add(p)
                        new.append(p)
                        q = inverse[p]
                        if q not in closed:
                            closed.add(q)
                            new.append(q)
        frontier = new
    return frozenset(closed)


def subsemigroups_up_to_order(n: int, k: int, dedupe: bool = True) -> List[FiniteSemigroup]:
    """I_n 中元素个数不超过 k 的全部逆子半群

    dedupe=True 时按同构去重（保留每个同构类中最先出现的代表），
    否则返回全部具体子半群。
    """
    if n > MAX_SUBSEMIGROUP_DEGREE:
        raise DegreeTooLargeError(
            f"subsemigroup search is limited to degree {MAX_SUBSEMIGROUP_DEGREE}, got {n}"
        )
    if k > MAX_SUBSEMIGROUP_SIZE:
        raise DegreeTooLargeError(
            f"subsemigroup search is limited to {MAX_SUBSEMIGROUP_SIZE} elements, got {k}"
        )
    if k < 1:
        return []

    monoid = monoid_In(n)
    elements = monoid_elements(n)
    index = {f: i for i, f in enumerate(elements)}
    inverse = [index[invert(f)] for f in elements]
    table = monoid.table

    found: Set[FrozenSet[int]] = set()
    frontier: List[FrozenSet[int]] = []
    for x in monoid.elements:
        closed = _inverse_closure(table, inverse, {x}, k)
        if len(closed) <= k and closed not in found:
            found.add(closed)
            frontier.append(closed)

    # 逐个添加生成元扩张，直到规模超过 k
    while frontier:
        grown: List[FrozenSet[int]] = []
        for subset in frontier:
            for x in monoid.elements:
                if x in subset:
                    continue
                closed = _inverse_closure(table, inverse, set(subset) | {x}, k)
                if len(closed) <= k and closed not in found:
                    found.add(closed)
                    grown.append(closed)
        frontier = grown

    ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
    subsemigroups = [monoid.restrict(sorted(s)) for s in ordered]
    logger.info(f"I_{n}: {len(subsemigroups)} inverse subsemigroups with at most {k} elements")
    if not dedupe:
        return subsemigroups

    from src.enumeration.canonical import canonical_form

    seen: Set[str] = set()
    unique = []
    for S in subsemigroups:
        digest = canonical_form(S).digest
        if digest not in seen:
            seen.add(digest)
            unique.append(S)
    logger.info(f"I_{n}: {len(unique)} up to isomorphism")
    return unique
