from dataclasses import asdict, dataclass, field
from typing import Dict

from src.classes.base.base_ring import BaseRing, RingValue


@dataclass
class SearchStatistics:
    branch_nodes: int = 0
    propagations: int = 0
    components: int = 0
    max_depth: int = 0
    absorptions: int = 0

    def merge(self, other: "SearchStatistics", depth_offset: int = 0) -> None:
        self.branch_nodes += other.branch_nodes
        self.propagations += other.propagations
        self.components += other.components
        self.absorptions += other.absorptions
        self.max_depth = max(self.max_depth, other.max_depth + depth_offset)

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass
class CountResult:
    count: RingValue
    ring: BaseRing
    algorithm: str
    statistics: SearchStatistics = field(default_factory=SearchStatistics)

    def formatted(self) -> str:
        return self.ring.format(self.count)
