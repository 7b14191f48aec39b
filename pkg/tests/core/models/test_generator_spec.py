import pytest
from pydantic import ValidationError

from geri_choice.config.enums import GeneratorKind
from geri_choice.core.exceptions import InvalidProblem, InvalidZeta
from geri_choice.core.models.generator import GeneratorSpec, NestStructure


class TestNestStructure:
    def test_lookup_arrays(self):
        structure = NestStructure(nests=[[0, 2], [1]], zeta=[0.5, 0.9])
        assert structure.n_options == 3
        assert structure.nest_of.tolist() == [0, 1, 0]
        assert structure.zeta_of.tolist() == [0.5, 0.9, 0.5]

    def test_restrict_reindexes_and_drops_empty_nests(self):
        structure = NestStructure(nests=[[0, 1], [2, 3]], zeta=[0.7, 0.8])
        sub = structure.restrict([0, 1, 2])
        assert sub.nests == [[0, 1], [2]]
        assert sub.zeta == [0.7, 0.8]

        only_second = structure.restrict([2, 3])
        assert only_second.nests == [[0, 1]]
        assert only_second.zeta == [0.8]


class TestGeneratorSpec:
    def test_shannon(self):
        spec = GeneratorSpec.shannon()
        assert spec.kind == GeneratorKind.SHANNON
        assert spec.n_options is None
        assert spec.to_dict() == {"kind": "shannon"}

    def test_nested_round_trip(self):
        data = {"kind": "nested_logit", "nests": [[0, 1, 2], [3, 4]], "zeta": [0.5, 0.5]}
        spec = GeneratorSpec.from_dict(data)
        assert spec.n_options == 5
        assert spec.to_dict() == data

    @pytest.mark.parametrize("zeta", [1.3, 0.0, 5e-7, -0.1])
    def test_zeta_out_of_range(self, zeta):
        with pytest.raises(InvalidZeta):
            GeneratorSpec.nested_logit([[0, 1]], [zeta])

    @pytest.mark.parametrize(
        "nests",
        [[[0, 1], [1, 2]], [[0, 2]], [[0, 1], []]],
    )
    def test_nests_must_partition(self, nests):
        with pytest.raises(InvalidProblem, match="nests must partition"):
            GeneratorSpec.nested_logit(nests, [0.5] * len(nests))

    def test_zeta_count_mismatch(self):
        with pytest.raises(InvalidProblem):
            GeneratorSpec.nested_logit([[0], [1]], [0.5])

    def test_unknown_kind(self):
        with pytest.raises(InvalidProblem, match="unknown generator kind"):
            GeneratorSpec.from_dict({"kind": "probit"})

    def test_nested_needs_structure(self):
        with pytest.raises(ValidationError):
            GeneratorSpec(kind=GeneratorKind.NESTED_LOGIT)

    def test_restrict_shannon_is_identity(self):
        spec = GeneratorSpec.shannon()
        assert spec.restrict([0, 2]) is spec
