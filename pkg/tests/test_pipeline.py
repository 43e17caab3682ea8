import pytest

from posetrank.analysis import ChainCapExceeded, StatsCollector
from posetrank.core.pipeline import PipelineComponent, RankPipeline
from posetrank.core.poset import BoundingOptions
from posetrank.core.ranks import standard_interval_rank
from posetrank.core.registry import ComponentNameCollisionError, Registry, UnknownComponentException
from posetrank.emit import RankTableWriter
from posetrank.ingest import HierarchyReader, PosetBuilder
from posetrank.service import Command, PosetRankService


class Doubler(PipelineComponent):
    def run(self, registry, value):
        return (value * registry.get("factor"),)


def test_registry():
    registry = Registry()
    registry.register("chain-cap", 10)
    assert registry.get("chain-cap") == 10
    with pytest.raises(ComponentNameCollisionError, match="already registered as 10"):
        registry.register("chain-cap", 20)
    assert registry.get("chain-cap") == 10
    with pytest.raises(UnknownComponentException, match="known settings: chain-cap"):
        registry.get("missing")


def test_pipeline_threads_outputs():
    registry = Registry()
    registry.register("factor", 3)
    pipeline = RankPipeline(registry, Doubler(), Doubler())
    assert pipeline.run((2,)) == (18,)
    assert str(pipeline.components[0]) == "Doubler"


def test_pipeline_reraises_failures():
    pipeline = RankPipeline(Registry(), Doubler())
    with pytest.raises(UnknownComponentException):
        pipeline.run((2,))


def test_ingest_components(data_dir):
    registry = Registry()
    registry.register("bounding-options", BoundingOptions())
    pipeline = RankPipeline(registry, HierarchyReader(), PosetBuilder())
    (poset,) = pipeline.run((str(data_dir / "n5.tsv"), "auto"))
    assert len(poset) == 5
    assert poset.top == "⊤"


def test_writer_rejects_unknown_format():
    with pytest.raises(ValueError):
        RankTableWriter("dot")


def test_stats_collector_respects_the_cap(ex9):
    rt = standard_interval_rank(ex9)
    registry = Registry()
    registry.register("chain-cap", 2)
    registry.register("require-full-enumeration", False)
    _, _, stats = StatsCollector().run(registry, ex9, rt)
    assert stats.truncated

    strict = Registry()
    strict.register("chain-cap", 2)
    strict.register("require-full-enumeration", True)
    with pytest.raises(ChainCapExceeded):
        StatsCollector().run(strict, ex9, rt)


def test_service(data_dir):
    service = PosetRankService(chain_cap=100)
    text, ok = service.run_pipeline(Command.STATS, str(data_dir / "ex9.tsv"), output_format="text")
    assert ok
    assert "maximal chains: 6" in text.splitlines()

    text, ok = service.run_pipeline(
        Command.CHECK,
        str(data_dir / "n5.tsv"),
        output_format="text",
        ranks_path=str(data_dir / "n5_constant_ranks.json"),
    )
    assert not ok
    assert text.startswith("8 violations of weak-dual rank function")


def test_check_needs_ranks(data_dir):
    with pytest.raises(ValueError):
        PosetRankService().run_pipeline(Command.CHECK, str(data_dir / "n5.tsv"), output_format="text")
