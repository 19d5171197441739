"""Citation-network analytics.

A directed edge (src, dst) records that src cites dst. Importance scoring
follows the citation direction: a citation transfers score from the citing
node to the cited one. Centralities are computed on the undirected
projection (the usual convention for citation studies); in/out citation
counts keep their direction. Betweenness is reported as an unnormalized
shortest-path pair count by default since the downstream linear model
absorbs scale.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConvergenceError, ParameterError, ParseError


@dataclass
class CitationGraph:
    nodes: list[str]
    edges: list[tuple[str, str]]
    out_adj: dict[str, list[str]] = field(init=False)
    in_adj: dict[str, list[str]] = field(init=False)
    undirected: dict[str, list[str]] = field(init=False)

    def __post_init__(self):
        if len(set(self.nodes)) != len(self.nodes):
            raise ParameterError("node ids must be unique")
        known = set(self.nodes)
        kept: list[tuple[str, str]] = []
        seen: set[tuple[str, str]] = set()
        dropped = 0
        for src, dst in self.edges:
            if src == dst:
                dropped += 1
                continue
            if (src, dst) in seen:
                continue
            seen.add((src, dst))
            kept.append((src, dst))
            for v in (src, dst):
                if v not in known:
                    known.add(v)
                    self.nodes.append(v)
        if dropped:
            warnings.warn(f"dropped {dropped} self-loop edge(s)")
        self.edges = kept
        self.out_adj = {v: [] for v in self.nodes}
        self.in_adj = {v: [] for v in self.nodes}
        und: dict[str, dict[str, None]] = {v: {} for v in self.nodes}
        for src, dst in kept:
            self.out_adj[src].append(dst)
            self.in_adj[dst].append(src)
            und[src][dst] = None
            und[dst][src] = None
        self.undirected = {v: list(nbrs) for v, nbrs in und.items()}

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass
class NodeScores:
    """Per-node score maps; fields are None until computed."""

    pagerank: dict[str, float] | None = None
    betweenness: dict[str, float] | None = None
    closeness: dict[str, float] | None = None
    degree: dict[str, int] | None = None
    in_citations: dict[str, int] | None = None
    out_citations: dict[str, int] | None = None


def load_edge_file(path: str | Path) -> CitationGraph:
    """Read a TSV edge list `src<TAB>dst`; lines starting with '#' are comments."""
    edges: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise ParseError(f"{path}:{lineno}: expected 'src<TAB>dst'")
            edges.append((parts[0], parts[1]))
    return CitationGraph(nodes=[], edges=edges)


def load_authorship(path: str | Path) -> dict[str, list[str]]:
    """Read a TSV authorship file `paper_id<TAB>author_id`, one row per author."""
    authors: dict[str, list[str]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise ParseError(f"{path}:{lineno}: expected 'paper_id<TAB>author_id'")
            authors.setdefault(parts[0], []).append(parts[1])
    return authors


def author_graph(graph: CitationGraph, authorship: dict[str, list[str]]) -> CitationGraph:
    """Collapse a paper graph to an author graph.

    Every paper citation (p, q) contributes one edge per (author of p,
    author of q) pair; author self-citations disappear as self-loops.
    """
    edges = []
    for src, dst in graph.edges:
        for a in authorship.get(src, []):
            for b in authorship.get(dst, []):
                edges.append((a, b))
    all_authors: list[str] = []
    seen: set[str] = set()
    for ids in authorship.values():
        for a in ids:
            if a not in seen:
                seen.add(a)
                all_authors.append(a)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # author self-loops are expected
        return CitationGraph(nodes=all_authors, edges=edges)


def pagerank(
    graph: CitationGraph,
    damping: float = 0.85,
    tol: float = 1e-9,
    max_iter: int = 200,
) -> dict[str, float]:
    """Power iteration on the citation direction.

    Dangling nodes (no outgoing citations) redistribute their score
    uniformly. Iteration stops when the L1 change drops below tol; the
    scores always sum to 1.
    """
    if len(graph) == 0:
        raise ParameterError("pagerank needs a non-empty graph")
    if not 0.0 < damping < 1.0:
        raise ParameterError(f"damping must be in (0, 1), got {damping}")

    nodes = graph.nodes
    n = len(nodes)
    index = {v: i for i, v in enumerate(nodes)}
    out_deg = [len(graph.out_adj[v]) for v in nodes]
    incoming = [[index[u] for u in graph.in_adj[v]] for v in nodes]

    p = [1.0 / n] * n
    base = (1.0 - damping) / n
    for _ in range(max_iter):
        dangling = sum(p[i] for i in range(n) if out_deg[i] == 0)
        new = [0.0] * n
        for i in range(n):
            s = sum(p[j] / out_deg[j] for j in incoming[i])
            new[i] = base + damping * (s + dangling / n)
        diff = sum(abs(new[i] - p[i]) for i in range(n))
        p = new
        if diff < tol:
            return {v: p[index[v]] for v in nodes}
    raise ConvergenceError(
        f"pagerank did not reach tol={tol} within {max_iter} iterations; "
        f"last L1 residual {diff:.3e}"
    )


def _single_source_paths(adj: dict[str, list[str]], source: str):
    """BFS bookkeeping for Brandes: visit order, distances, path counts,
    predecessor lists."""
    dist = {source: 0}
    sigma = {source: 1}
    preds: dict[str, list[str]] = {source: []}
    order = []
    queue = deque([source])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                sigma[w] = 0
                preds[w] = []
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return order, dist, sigma, preds


def betweenness(graph: CitationGraph, normalized: bool = False) -> dict[str, float]:
    """Brandes betweenness on the undirected projection.

    Values are shortest-path pair counts (each unordered pair counted
    once); normalized=True divides by (n-1)(n-2)/2.
    """
    adj = graph.undirected
    scores = {v: 0.0 for v in graph.nodes}
    for source in graph.nodes:
        order, _dist, sigma, preds = _single_source_paths(adj, source)
        delta = {v: 0.0 for v in order}
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != source:
                scores[w] += delta[w]
    for v in scores:
        scores[v] /= 2.0
    if normalized:
        n = len(graph)
        scale = (n - 1) * (n - 2) / 2.0
        if scale > 0:
            for v in scores:
                scores[v] /= scale
    return scores


def closeness(graph: CitationGraph) -> dict[str, float]:
    """(reachable - 1) / sum of distances on the undirected projection;
    isolated nodes score 0."""
    out = {}
    for v in graph.nodes:
        _order, dist, _sigma, _preds = _single_source_paths(graph.undirected, v)
        total = sum(dist.values())
        out[v] = (len(dist) - 1) / total if total > 0 else 0.0
    return out


def centralities(graph: CitationGraph, normalized_betweenness: bool = False) -> NodeScores:
    """Betweenness, closeness, and undirected degree for every node."""
    if len(graph) == 0:
        raise ParameterError("centralities need a non-empty graph")
    return NodeScores(
        betweenness=betweenness(graph, normalized=normalized_betweenness),
        closeness=closeness(graph),
        degree={v: len(graph.undirected[v]) for v in graph.nodes},
    )


def citation_counts(graph: CitationGraph) -> tuple[dict[str, int], dict[str, int]]:
    """(in_citations, out_citations) per node, directed."""
    ins = {v: len(graph.in_adj[v]) for v in graph.nodes}
    outs = {v: len(graph.out_adj[v]) for v in graph.nodes}
    return ins, outs


def node_scores(
    graph: CitationGraph,
    damping: float = 0.85,
    tol: float = 1e-9,
    max_iter: int = 200,
) -> NodeScores:
    """All score families in one pass; the usual entry point for the CLI."""
    scores = centralities(graph)
    scores.pagerank = pagerank(graph, damping=damping, tol=tol, max_iter=max_iter)
    scores.in_citations, scores.out_citations = citation_counts(graph)
    return scores


def threshold_label(score: float, threshold: float) -> str:
    """'Y' strictly above the threshold, 'A' at or below it."""
    return "Y" if score > threshold else "A"
