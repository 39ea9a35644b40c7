"""
Decomposition pipeline service
Runs listing, ordering and splitting; verifies against the oracle; benchmarks
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd

from config.settings import settings
from models import Diagnostics, FourBlockTree, OrderedTriangleList, TriangleRecord
from schemas.generator import GenSpec
from schemas.graph import DiagnosticsDocument, FindingEntry, OrderedTriangleEntry, TriangleEntry
from schemas.report import BenchResult, BenchRow, PhaseTimings, RunReport
from services.embedding import RotationGraph, parse_rotation_graph, validate_triangulation
from services.errors import OracleLimitError, TriangulationError
from services.generators import generate
from services.oracle import (
    brute_4block_tree,
    brute_separating_triangles,
    containment_relation,
    region_left_of,
    separating_by_removal,
    tree_diff,
)
from services.ordering import order_separating_triangles
from services.splitting import decompose, is_four_connected_component
from services.triangles import separating_triangles
from utils.counters import OperationCounter

logger = logging.getLogger(__name__)


@dataclass
class PipelineResult:
    graph: RotationGraph
    separating: List[TriangleRecord]
    ordered: OrderedTriangleList
    tree: Optional[FourBlockTree]
    report: RunReport
    counter: OperationCounter = field(default_factory=OperationCounter)


class DecompositionService:
    """Entry points shared by the CLI and the HTTP API"""

    def load(self, text: str) -> RotationGraph:
        return parse_rotation_graph(text)

    def validate(self, graph: RotationGraph) -> Diagnostics:
        return validate_triangulation(graph)

    def require_valid(self, graph: RotationGraph) -> None:
        diagnostics = validate_triangulation(graph)
        if not diagnostics.ok:
            raise TriangulationError(diagnostics)

    def separating(self, graph: RotationGraph) -> List[TriangleRecord]:
        self.require_valid(graph)
        return separating_triangles(graph)

    def order(self, graph: RotationGraph) -> OrderedTriangleList:
        self.require_valid(graph)
        return order_separating_triangles(graph, separating_triangles(graph))

    def _analyze(self, graph: RotationGraph, label: str) -> PipelineResult:
        """Listing and ordering on the intact graph"""
        self.require_valid(graph)
        counter = OperationCounter()
        timings = PhaseTimings()

        start = time.perf_counter()
        found = separating_triangles(graph, counter)
        timings.listing = time.perf_counter() - start

        start = time.perf_counter()
        ordered = order_separating_triangles(graph, found, counter)
        timings.ordering = time.perf_counter() - start

        report = RunReport(
            label=label,
            n=graph.vertex_count,
            m=graph.edge_count,
            separating_triangles=len(found),
            components=len(found) + 1,
            timings=timings,
        )
        return PipelineResult(graph=graph, separating=found, ordered=ordered, tree=None, report=report, counter=counter)

    def _split(self, result: PipelineResult) -> PipelineResult:
        start = time.perf_counter()
        result.tree = decompose(result.graph, result.ordered, result.counter)
        result.report.timings.splitting = time.perf_counter() - start
        result.report.components = result.tree.node_count
        result.report.transfers = result.tree.transfers
        result.report.counters = result.counter.as_dict()
        logger.info(
            f"Pipeline {result.report.label or 'run'}: n={result.report.n}, |T|={result.report.separating_triangles}, "
            f"{result.report.timings.total:.4f}s"
        )
        return result

    def run(self, graph: RotationGraph, label: str = "") -> PipelineResult:
        """Full pipeline; ``graph`` is split in place"""
        return self._split(self._analyze(graph, label))

    def verify(self, graph: RotationGraph, label: str = "") -> RunReport:
        """
        Run the pipeline and the oracle on the same instance and compare
        triangle sets, order, reference edges, components and tree shape.

        Raises:
            OracleLimitError: the instance exceeds ORACLE_MAX_N vertices.
        """
        if graph.vertex_count > settings.ORACLE_MAX_N:
            raise OracleLimitError(
                f"instance has {graph.vertex_count} vertices; the oracle is limited to {settings.ORACLE_MAX_N}"
            )
        self.require_valid(graph)
        differences: List[str] = []

        expected = brute_separating_triangles(graph)
        if graph.vertex_count >= 5:
            by_removal = separating_by_removal(graph)
            if by_removal != expected:
                differences.append(f"oracle disagrees with itself: facial test {sorted(expected)}, removal {sorted(by_removal)}")
        relation = containment_relation(graph, expected)
        oracle_tree = brute_4block_tree(graph)

        result = self._analyze(graph, label)
        found = {t.corners for t in result.separating}
        for t in sorted(found - expected):
            differences.append(f"pipeline reports {t} which is not separating")
        for t in sorted(expected - found):
            differences.append(f"pipeline misses separating triangle {t}")

        position = result.ordered.positions()
        for inner, outer in relation.pairs():
            if inner in position and outer in position and position[inner] >= position[outer]:
                differences.append(f"{inner} lies inside {outer} but is ordered after it")
        for t in result.ordered:
            if region_left_of(graph, t.reference_edge, t.corners) != relation.interiors.get(t.corners):
                differences.append(f"reference edge of {t.corners} does not have the interior to its left")

        self._split(result)
        for component in result.tree.components:
            if not is_four_connected_component(component):
                differences.append(f"component {component.id} is not 4-connected")
        differences.extend(tree_diff(result.tree, oracle_tree))

        report = result.report
        report.agreement = not differences
        report.differences = differences
        if differences:
            logger.warning(f"Verification of {label or 'instance'} found {len(differences)} differences")
        return report

    def verify_spec(self, spec: GenSpec) -> RunReport:
        return self.verify(generate(spec), label=spec.label())

    def verify_many(self, specs: Sequence[GenSpec], workers: Optional[int] = None) -> List[RunReport]:
        """Verify independent instances on a thread pool; reports keep the input order"""
        workers = workers or settings.VERIFY_WORKERS
        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            return list(pool.map(self.verify_spec, specs))

    def bench(self, kind: str, sizes: Sequence[int], seed: Optional[int] = None) -> BenchResult:
        """
        Time the pipeline over growing instances.

        Returns:
            One row per size and the least-squares slope of log(seconds)
            against log(n); the slope is None with fewer than two rows.
        """
        seed = settings.DEFAULT_SEED if seed is None else seed
        rows: List[BenchRow] = []
        for size in sizes:
            if kind == "nested-chain":
                spec = GenSpec(kind=kind, k=size)
            else:
                spec = GenSpec(kind=kind, n=size, seed=seed)
            graph = generate(spec)
            n, m = graph.vertex_count, graph.edge_count
            start = time.perf_counter()
            result = self.run(graph, label=spec.label())
            seconds = time.perf_counter() - start
            rows.append(BenchRow(kind=kind, size=size, n=n, m=m, seconds=seconds, transfers=result.tree.transfers))
            logger.info(f"Bench {spec.label()}: {seconds:.4f}s, {result.tree.transfers} transfers")

        slope = None
        if len(rows) >= 2 and all(row.seconds > 0 for row in rows):
            log_n = np.log([row.n for row in rows])
            log_s = np.log([row.seconds for row in rows])
            slope = float(np.polyfit(log_n, log_s, 1)[0])
        return BenchResult(rows=rows, slope=slope)

    @staticmethod
    def bench_table(result: BenchResult) -> pd.DataFrame:
        return pd.DataFrame([row.model_dump() for row in result.rows])

    # Rendering helpers

    @staticmethod
    def diagnostics_document(graph: RotationGraph, diagnostics: Diagnostics) -> DiagnosticsDocument:
        return DiagnosticsDocument(
            ok=diagnostics.ok,
            n=graph.vertex_count,
            m=graph.edge_count,
            findings=[FindingEntry(kind=f.kind.value, message=f.message) for f in diagnostics.findings],
        )

    @staticmethod
    def triangle_entries(graph: RotationGraph, triangles: Sequence[TriangleRecord]) -> List[TriangleEntry]:
        return [TriangleEntry(corners=tuple(sorted(graph.origin(v) for v in t.corners))) for t in triangles]

    @staticmethod
    def ordered_entries(graph: RotationGraph, ordered: OrderedTriangleList) -> List[OrderedTriangleEntry]:
        return [
            OrderedTriangleEntry(
                position=i,
                corners=tuple(sorted(graph.origin(v) for v in t.corners)),
                reference_edge=(graph.origin(graph.tail(t.reference_edge)), graph.origin(graph.head(t.reference_edge))),
                internal_angle=t.internal_angle,
                time=t.time,
            )
            for i, t in enumerate(ordered)
        ]


decomposition_service = DecompositionService()
