#!/usr/bin/env python3
"""
测试 JSON 模型
"""

import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest
from pydantic import ValidationError

from src.core.errors import BudgetExceededError, GraphValidationError
from src.cover.cover import canonical_cover, make_cover, make_twister
from src.cover.labeling import detect_twisted_canonical
from src.graph.graph import standard_graph
from src.product.constructions import construct_deterministic_bad_cover
from src.product.shift_classes import shift_classes_odd
from src.product.volatile import badness_verdict
from src.schemas import (
    BadnessVerdictModel,
    CoverModel,
    ErrorResponse,
    GraphModel,
    LabelingWitnessModel,
    ProductCoverModel,
    ShiftClassPartitionModel,
)


def test_graph_model_validation():
    assert GraphModel(n=3, edges=[[0, 1]]).to_domain().edges == ((0, 1),)
    with pytest.raises(ValidationError):
        GraphModel(n=0)
    with pytest.raises(ValidationError):
        GraphModel(n=3, edges=[[0, 1, 2]])
    with pytest.raises(GraphValidationError):
        GraphModel(n=3, edges=[[1, 1]]).to_domain()


def test_cover_model_from_json():
    """未列出的边取空匹配；同一条边多次出现时合并"""
    document = {
        "graph": {"n": 3, "edges": [[0, 1], [1, 2]]},
        "list_sizes": [2, 2, 2],
        "links": [
            {"edge": [0, 1], "pairs": [[0, 1]]},
            {"edge": [0, 1], "pairs": [[1, 0]]},
        ],
    }
    cover = CoverModel.model_validate(document).to_domain()
    assert cover.links == (((0, 1), (1, 0)), ())
    assert not cover.is_full()


def test_cover_model_reversed_edge():
    """边写成 [v, u] 时匹配按该方向解释"""
    graph = standard_graph('path', [2])
    cover = CoverModel.model_validate({
        "graph": {"n": 2, "edges": [[0, 1]]},
        "list_sizes": [2, 3],
        "links": [{"edge": [1, 0], "pairs": [[2, 0]]}],
    }).to_domain()
    assert cover == make_cover(graph, [2, 3], {(0, 1): [(0, 2)]})


def test_cover_and_product_models_round_trip():
    twister = make_twister(2, 3)
    assert CoverModel.from_domain(twister).to_domain() == twister
    pc = construct_deterministic_bad_cover(standard_graph('complete', [1]), 2, 4)
    model = ProductCoverModel.from_domain(pc)
    assert model.k == 2 and model.t == 4 and model.seed is None
    restored = ProductCoverModel.model_validate(model.model_dump(mode='json')).to_domain()
    assert restored.cover == pc.cover


def test_labeling_witness_model():
    witness = detect_twisted_canonical(make_twister(2, 3))
    dumped = LabelingWitnessModel.from_domain(witness).model_dump(mode='json')
    assert dumped['kind'] == 'twisted_canonical' and len(dumped['twist_edge']) == 2
    assert LabelingWitnessModel.model_validate(dumped).to_domain() == witness


def test_verdict_model():
    pc = construct_deterministic_bad_cover(standard_graph('complete', [1]), 1, 1)
    bad = BadnessVerdictModel.from_domain(badness_verdict(pc))
    assert bad.verdict == 'bad' and bad.coloring is None and bad.x_coloring_count == 1
    with pytest.raises(ValidationError):
        BadnessVerdictModel(verdict='maybe')


def test_shift_class_model():
    model = ShiftClassPartitionModel.from_domain(shift_classes_odd(3, 3))
    assert model.class_count == 2 and model.modulus == 3
    assert model.classes[0][0] == [0, 1, 2]


def test_error_response_from_exception():
    response = ErrorResponse.from_exception(BudgetExceededError("太大", size=10, limit=5))
    assert response.success is False
    assert response.type == 'BudgetExceededError'
    assert response.details == {'size': 10, 'limit': 5}
    plain = ErrorResponse.from_exception(OSError("no such file"))
    assert plain.error == "no such file" and plain.details is None


def test_canonical_cover_model_lists_every_edge():
    cover = canonical_cover(standard_graph('cycle', [3]), 2)
    model = CoverModel.from_domain(cover)
    assert [link.edge for link in model.links] == [[0, 1], [0, 2], [1, 2]]
    assert all(link.pairs == [[0, 0], [1, 1]] for link in model.links)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
