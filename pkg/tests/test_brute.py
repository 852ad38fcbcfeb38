from fractions import Fraction

import pytest

from mackey.brute import (
    BudgetExceededError,
    ExplicitModule,
    Filtration,
    build_tensor_module,
    constituent_count,
    dump_filtration,
    grade_filtration,
    is_essential_filtration,
    parabolic,
    quotient_module,
    restrict_module,
    socle_filtration_parabolic,
    traceless_dimension,
    traceless_subspace,
    vandermonde_span,
    weight_decompose,
    young_project,
)
from mackey.linalg import (
    CancelToken,
    OperationCancelled,
    SparseMatrix,
    Subspace,
    unit_vec,
    vec,
)
from mackey.partitions import EMPTY, Partition

P = Partition
F = Fraction


def word_indices(module):
    return [tuple(idx for idx, _ in label) for label in module.labels]


# --- construction and the dual action convention ---------------------------

def test_dual_action_sign_convention_bit_exact():
    # on (C^2*): the generator labeled (1,2) sends e2* to -e1* and kills e1*
    module = build_tensor_module(2, 1, 0)
    a = module.action((1, 2))
    assert a.apply(vec([0, 1])) == vec([-1, 0])
    assert a.apply(vec([1, 0])) == vec([0, 0])
    b = module.action((2, 1))
    assert b.apply(vec([1, 0])) == vec([0, -1])


def test_plain_slot_action():
    # on C^2 (no stars): label (1,2) moves e1 to e2
    module = build_tensor_module(2, 0, 1)
    a = module.action((1, 2))
    assert a.apply(vec([1, 0])) == vec([0, 1])
    assert a.apply(vec([0, 1])) == vec([0, 0])


def test_diagonal_eigenvalues_on_square_of_dual():
    module = build_tensor_module(2, 2, 0)
    assert module.dimension == 4
    eigenvalues = sorted(module.action((1, 1)).diagonal_entries())
    assert eigenvalues == vec([-2, -1, -1, 0])


def test_invariant_pairing_vector_is_killed():
    module = build_tensor_module(3, 1, 1)
    assert module.dimension == 9
    invariant = [F(0)] * 9
    for pos, (a, b) in enumerate(word_indices(module)):
        if a == b:
            invariant[pos] = F(1)
    for i in range(1, 4):
        for j in range(1, 4):
            if i == j:
                continue
            assert not any(module.action((i, j)).apply(invariant)), (i, j)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        build_tensor_module(10, 3, 2, budget=1000)


def test_basis_labels_mark_starred_slots():
    module = build_tensor_module(2, 1, 1)
    assert module.labels[0] == ((1, True), (1, False))


# --- traceless subspaces ----------------------------------------------------

def test_traceless_dimensions():
    assert traceless_subspace(build_tensor_module(3, 1, 1)).dim == 8
    assert traceless_subspace(build_tensor_module(2, 1, 1)).dim == 3
    # 27 minus the rank (6) of the two stacked contraction maps
    assert traceless_subspace(build_tensor_module(3, 2, 1)).dim == 21


def test_traceless_dimension_matches_subspace():
    for n_rank in (2, 3):
        for m in range(3):
            for n in range(3):
                module = build_tensor_module(n_rank, m, n)
                assert traceless_dimension(n_rank, m, n) == \
                    traceless_subspace(module).dim


def test_traceless_subspace_is_invariant():
    module = build_tensor_module(3, 1, 1)
    t = traceless_subspace(module)
    for label in module.generator_labels():
        a = module.action(label)
        for v in t.basis:
            assert t.contains(a.apply(v))


# --- Young projectors -------------------------------------------------------

def test_young_project_dimensions():
    assert young_project(build_tensor_module(3, 1, 1), P([1]), P([1])).dim == 8
    m2 = build_tensor_module(3, 2, 0)
    assert young_project(m2, P([2]), EMPTY).dim == 6
    assert young_project(m2, P([1, 1]), EMPTY).dim == 3
    # W_{(1),(2)} at rank 4, Weyl dimension 36
    assert young_project(build_tensor_module(4, 1, 2), P([1]), P([2])).dim == 36


def test_young_project_size_mismatch():
    module = build_tensor_module(3, 2, 0)
    with pytest.raises(ValueError):
        young_project(module, P([1]), EMPTY)
    with pytest.raises(ValueError):
        young_project(module, P([2]), P([1]))


def test_young_project_vanishing_shape():
    # a column of height 3 cannot fit in C^2
    module = build_tensor_module(2, 3, 0)
    assert young_project(module, P([1, 1, 1]), EMPTY).dim == 0


# --- parabolic data ---------------------------------------------------------

def test_parabolic_block_sizes():
    p = parabolic(2, 1)
    assert sorted(p.levi_labels) == [(1, 1), (2, 2)]
    assert p.nilradical_labels == [(1, 2)]
    assert len(parabolic(3, 1).nilradical_labels) == 2
    p42 = parabolic(4, 2)
    assert len(p42.levi_labels) == 8
    assert len(p42.nilradical_labels) == 4


def test_parabolic_rejects_bad_split():
    with pytest.raises(ValueError):
        parabolic(3, 0)
    with pytest.raises(ValueError):
        parabolic(3, 3)


def test_nilradical_maps_complement_into_distinguished_block():
    module = build_tensor_module(3, 1, 0)
    p = parabolic(3, 1)
    for label in p.nilradical_labels:
        a = module.action(label)
        image = a.apply(vec([0, 1, 1]))
        assert image[1] == 0 and image[2] == 0


# --- socle filtrations ------------------------------------------------------

def test_socle_filtration_of_dual_module():
    module = build_tensor_module(3, 1, 0)
    filtration = socle_filtration_parabolic(module, parabolic(3, 1))
    assert [s.dim for s in filtration] == [1, 3]
    assert filtration.steps[0].contains(unit_vec(3, 0))


def test_socle_filtration_of_trivial_module():
    module = build_tensor_module(4, 0, 0)
    filtration = socle_filtration_parabolic(module, parabolic(4, 2))
    assert [s.dim for s in filtration] == [1]


def test_socle_filtration_schur_square():
    # S_(2)(C^5*) against the parabolic at b=3: layers 6, 6, 3
    module = build_tensor_module(5, 2, 0)
    projected = young_project(module, P([2]), EMPTY)
    schur_module = restrict_module(module, projected)
    filtration = socle_filtration_parabolic(schur_module, parabolic(5, 3))
    assert filtration.layer_dimensions() == [6, 6, 3]


def test_socle_filtration_steps_are_parabolic_invariant():
    module = build_tensor_module(4, 2, 0)
    p = parabolic(4, 2)
    filtration = socle_filtration_parabolic(module, p)
    for step in filtration:
        for label in p.labels:
            a = module.action(label)
            for v in step.basis:
                assert step.contains(a.apply(v))


def test_filtration_must_ascend():
    line = Subspace(2, [unit_vec(2, 0)])
    other = Subspace(2, [unit_vec(2, 1)])
    with pytest.raises(ValueError):
        Filtration([line, other])


# --- essentiality -----------------------------------------------------------

def zero_module(dim):
    return ExplicitModule(dim, 1, lambda label: SparseMatrix(dim))


def test_single_step_filtration_is_essential():
    module = zero_module(2)
    full = Subspace(2, [unit_vec(2, 0), unit_vec(2, 1)])
    assert is_essential_filtration(module, Filtration([full]), [])


def test_socle_filtration_is_essential():
    module = build_tensor_module(4, 2, 0)
    p = parabolic(4, 2)
    filtration = socle_filtration_parabolic(module, p)
    assert is_essential_filtration(module, filtration, p)


def test_trivial_sum_line_is_not_essential():
    module = zero_module(2)
    line = Subspace(2, [vec([1, 2])])
    full = Subspace(2, [unit_vec(2, 0), unit_vec(2, 1)])
    assert not is_essential_filtration(module, Filtration([line, full]), [])


def test_essentiality_rejects_non_invariant_filtration():
    module = build_tensor_module(2, 1, 0)
    p = parabolic(2, 1)
    crooked = Subspace(2, [vec([1, 1])])  # moved by the nilradical
    full = Subspace(2, [unit_vec(2, 0), unit_vec(2, 1)])
    with pytest.raises(ValueError):
        is_essential_filtration(module, Filtration([crooked, full]), p)


def test_essentiality_rejects_truncated_filtration():
    module = build_tensor_module(2, 1, 0)
    p = parabolic(2, 1)
    line = Subspace(2, [unit_vec(2, 0)])
    with pytest.raises(ValueError):
        is_essential_filtration(module, Filtration([line]), p)


def test_grade_filtration_essential_and_matches_word_counts():
    module = build_tensor_module(4, 2, 0)
    p = parabolic(4, 2)
    filtration = grade_filtration(module, p)
    assert [s.dim for s in filtration] == [4, 12, 16]
    assert is_essential_filtration(module, filtration, p)


def test_grade_filtration_meets_traceless():
    # intersecting the grade filtration with the traceless subspace still
    # gives an ascending invariant chain (the traceless variant)
    module = build_tensor_module(4, 1, 1)
    p = parabolic(4, 2)
    t = traceless_subspace(module)
    steps = [step.intersection(t) for step in grade_filtration(module, p)]
    assert [s.dim for s in steps] == [7, 15]
    chain = Filtration(steps)
    for step in chain:
        for label in p.labels:
            a = module.action(label)
            for v in step.basis:
                assert step.contains(a.apply(v))


# --- weight decomposition and Vandermonde spans -----------------------------

def test_weight_decompose_dual_vector_module():
    module = build_tensor_module(2, 1, 0)
    decomposition = weight_decompose(module, [(1, 1), (2, 2)])
    dims = {weight: space.dim for weight, space in decomposition.items()}
    assert dims == {(F(-1), F(0)): 1, (F(0), F(-1)): 1}


def test_weight_decompose_square():
    module = build_tensor_module(2, 2, 0)
    decomposition = weight_decompose(module, [(1, 1), (2, 2)])
    dims = {weight: space.dim for weight, space in decomposition.items()}
    assert dims == {(F(-2), F(0)): 1, (F(-1), F(-1)): 2, (F(0), F(-2)): 1}
    assert sum(dims.values()) == module.dimension


def test_weight_decompose_traceless_adjoint():
    module = build_tensor_module(3, 1, 1)
    t = traceless_subspace(module)
    sub = restrict_module(module, t)
    decomposition = weight_decompose(sub, [(1, 1), (2, 2), (3, 3)])
    zero = decomposition[(F(0), F(0), F(0))]
    assert zero.dim == 2


def test_weight_decompose_rejects_non_diagonal():
    module = build_tensor_module(2, 1, 0)
    with pytest.raises(ValueError):
        weight_decompose(module, [(1, 2)])


def test_vandermonde_span_examples():
    assert vandermonde_span([vec([7])], SparseMatrix.diagonal([3])) == 1
    h3 = SparseMatrix.diagonal([1, 2, 3])
    comps = [unit_vec(3, i) for i in range(3)]
    assert vandermonde_span(comps, h3) == 3
    h4 = SparseMatrix.diagonal([5, 25, 125, 625])
    comps4 = [unit_vec(4, i) for i in range(4)]
    assert vandermonde_span(comps4, h4) == 4


def test_vandermonde_rejects_repeats_and_non_eigenvectors():
    h = SparseMatrix.diagonal([1, 1])
    with pytest.raises(ValueError):
        vandermonde_span([unit_vec(2, 0), unit_vec(2, 1)], h)
    h2 = SparseMatrix.diagonal([1, 2])
    with pytest.raises(ValueError):
        vandermonde_span([vec([1, 1])], h2)
    with pytest.raises(ValueError):
        vandermonde_span([vec([0, 0])], h2)


# --- restriction, quotients, counting ---------------------------------------

def test_restrict_module_rejects_non_invariant_subspace():
    module = build_tensor_module(2, 1, 0)
    crooked = restrict_module(module, Subspace(2, [vec([1, 1])]))
    with pytest.raises(ValueError):
        crooked.action((1, 2))


def test_quotient_module_dimensions_and_action():
    module = build_tensor_module(3, 1, 0)
    socle = Subspace(3, [unit_vec(3, 0)])
    quotient, project = quotient_module(module, socle)
    assert quotient.dimension == 2
    # the nilradical of (3,1) hits the socle, so it acts by zero downstairs
    for label in parabolic(3, 1).nilradical_labels:
        assert quotient.action(label).is_zero()
    assert project(vec([5, 1, 2])) == vec([1, 2])


def test_constituent_count_matches_length_formula():
    assert constituent_count(build_tensor_module(6, 2, 0), parabolic(6, 3)) == 6
    assert constituent_count(build_tensor_module(4, 1, 0), parabolic(4, 2)) == 2


def gl_constituents(n_rank, m):
    """Constituents of (C^N*)^(x)m over all of gl(N): highest weight vectors,
    counted as the joint kernel of the simple raising generators.
    """
    from mackey.linalg import nullspace
    module = build_tensor_module(n_rank, m, 0)
    rows = []
    for i in range(1, n_rank):
        rows.extend(r for r in module.action((i, i + 1)).to_dense_rows() if any(r))
    if not rows:
        return module.dimension
    return len(nullspace(rows, module.dimension))


def test_tensor_length_degree_four_against_semisimple_counts():
    # the parabolic at (8, 4) is past the dense-linear-algebra budget, but
    # the grade-layer counts it would produce factor through gl(4) highest
    # weight counts on each block, which are affordable directly
    from math import comb
    from mackey.socle import tensor_length
    counts = {j: gl_constituents(4, j) for j in range(5)}
    assert counts == {0: 1, 1: 1, 2: 2, 3: 4, 4: 10}
    expected = sum(comb(4, k) * counts[k] * counts[4 - k] for k in range(5))
    assert tensor_length(4, 0) == expected == 76


def test_dump_filtration_format():
    module = build_tensor_module(3, 1, 0)
    filtration = socle_filtration_parabolic(module, parabolic(3, 1))
    text = dump_filtration(filtration)
    lines = text.splitlines()
    assert lines[0] == "# step 0 dim 1"
    assert lines[1] == "1/1 0/1 0/1"
    assert "# step 1 dim 3" in lines


def test_cancellation_interrupts_filtration():
    token = CancelToken()
    token.cancel()
    module = build_tensor_module(3, 2, 0)
    with pytest.raises(OperationCancelled):
        socle_filtration_parabolic(module, parabolic(3, 1), token)
    with pytest.raises(OperationCancelled):
        traceless_dimension(3, 1, 1, cancel=token)
