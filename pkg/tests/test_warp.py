import numpy as np
import pytest

import oracles
from conftest import disk_mask, random_image
from maskaug.core import CategoricalMask
from maskaug.resample import BoundaryPolicy, InterpMethod
from maskaug.warp import (AffineTransform, TransformParams, compose, invert,
                          warp_image, warp_mask)

POLICY = BoundaryPolicy(0)
ALL_METHODS = list(InterpMethod)


def random_params(rng):
    return TransformParams(rotation=rng.uniform(-45, 45),
                           shear_h=rng.uniform(-15, 15),
                           shear_v=rng.uniform(-15, 15),
                           tx=rng.uniform(-10, 10),
                           ty=rng.uniform(-10, 10),
                           scale=rng.uniform(0.8, 1.2))


def test_compose_neutral_is_identity():
    t = compose(TransformParams(), (10.0, 20.0))
    assert np.allclose(t.matrix, np.eye(3))


def test_compose_pure_translation():
    t = compose(TransformParams(tx=3), (5.0, 5.0))
    expect = np.eye(3)
    expect[0, 2] = 3
    assert np.allclose(t.matrix, expect)


def test_compose_rotation_90_maps_corner():
    t = compose(TransformParams(rotation=90), (127.5, 127.5))
    x, y = t.apply(0.0, 0.0)
    assert abs(x - 255) < 1e-9 and abs(y - 0) < 1e-9


def test_invert_identity_and_translation():
    assert np.allclose(invert(AffineTransform.identity()).matrix, np.eye(3))
    inv = invert(AffineTransform.translation(3, -2))
    assert np.allclose(inv.matrix, AffineTransform.translation(-3, 2).matrix)


def test_invert_round_trip_random():
    rng = np.random.default_rng(10)
    for _ in range(50):
        t = compose(random_params(rng), (rng.uniform(0, 64), rng.uniform(0, 64)))
        assert np.allclose(invert(invert(t)).matrix, t.matrix, atol=1e-9)
        assert np.allclose((t @ invert(t)).matrix, np.eye(3), atol=1e-9)


def test_singular_matrix_rejected():
    with pytest.raises(ValueError, match="singular"):
        AffineTransform(np.array([[1.0, 0, 0], [2.0, 0, 0], [0, 0, 1.0]]))


def test_transform_params_validation():
    with pytest.raises(ValueError):
        TransformParams(scale=0)
    with pytest.raises(ValueError):
        TransformParams(rotation=float("nan"))


def test_identity_warp_bit_identical():
    img = random_image(20, 17, channels=3, seed=11)
    t = AffineTransform.identity()
    for method in ALL_METHODS:
        assert (warp_image(img, t, method, POLICY).data == img.data).all()


def test_integer_translation_nearest_shift_oracle():
    img = random_image(12, 15, seed=12)
    t = AffineTransform.translation(3, 0)
    out = warp_image(img, t, InterpMethod.NEAREST, BoundaryPolicy(9)).data[:, :, 0]
    expect = np.full_like(out, 9)
    expect[:, 3:] = img.data[:, :-3, 0]
    assert (out == expect).all()


def test_rotation_90_is_pixel_permutation():
    img = random_image(32, 32, seed=13)
    t = compose(TransformParams(rotation=90), (15.5, 15.5))
    src = img.data[:, :, 0]
    # inverse of the 90 degree rotation about the grid center: out[y, x] = in[N-1-x, y]
    expect = np.empty_like(src)
    for y in range(32):
        for x in range(32):
            expect[y, x] = src[31 - x, y]
    for method in ALL_METHODS:
        out = warp_image(img, t, method, POLICY).data[:, :, 0]
        assert (out == expect).all(), method


def test_grid_aligned_transforms_method_invariant():
    rng = np.random.default_rng(14)
    for _ in range(10):
        n = int(rng.integers(8, 33))
        img = random_image(n, n, seed=int(rng.integers(1 << 30)))
        c = (n - 1) / 2
        cases = [AffineTransform.translation(int(rng.integers(-5, 6)),
                                             int(rng.integers(-5, 6)))]
        cases += [compose(TransformParams(rotation=d), (c, c))
                  for d in (90, 180, 270)]
        for t in cases:
            outs = [warp_image(img, t, m, POLICY).data for m in ALL_METHODS]
            assert (outs[0] == outs[1]).all() and (outs[0] == outs[2]).all()


def test_nearest_matches_brute_force_oracle():
    rng = np.random.default_rng(15)
    for _ in range(20):
        h, w = int(rng.integers(4, 33)), int(rng.integers(4, 33))
        img = random_image(h, w, seed=int(rng.integers(1 << 30)))
        t = compose(random_params(rng), ((w - 1) / 2, (h - 1) / 2))
        got = warp_image(img, t, InterpMethod.NEAREST, BoundaryPolicy(5)).data[:, :, 0]
        expect = oracles.warp_scalar(img.data[:, :, 0].tolist(),
                                     t.matrix.tolist(), "NEA", 5)
        assert got.tolist() == expect


def test_epi_methods_match_direct_oracle():
    rng = np.random.default_rng(16)
    for _ in range(8):
        h, w = int(rng.integers(4, 25)), int(rng.integers(4, 25))
        img = random_image(h, w, seed=int(rng.integers(1 << 30)))
        t = compose(random_params(rng), ((w - 1) / 2, (h - 1) / 2))
        for method in (InterpMethod.BILINEAR, InterpMethod.BICUBIC):
            got = warp_image(img, t, method, POLICY).data[:, :, 0]
            expect = oracles.warp_scalar(img.data[:, :, 0].tolist(),
                                         t.matrix.tolist(), method.value, 0)
            assert got.tolist() == expect


def test_warp_mask_nearest_stays_binary():
    mask = disk_mask(48)
    rng = np.random.default_rng(17)
    for _ in range(10):
        t = compose(random_params(rng), (23.5, 23.5))
        out = warp_mask(mask, t, InterpMethod.NEAREST, POLICY)
        assert set(np.unique(out.data)) <= {0, 255}


def test_warp_mask_bicubic_produces_intermediate_values():
    mask = disk_mask(64)
    t = compose(TransformParams(rotation=30), (31.5, 31.5))
    out = warp_mask(mask, t, InterpMethod.BICUBIC, POLICY)
    values = np.unique(out.data)
    assert ((values > 0) & (values < 255)).any()


def test_warp_mask_identity_any_method():
    mask = disk_mask(32)
    for method in ALL_METHODS:
        out = warp_mask(mask, AffineTransform.identity(), method, POLICY)
        assert (out.data == mask.data).all()


def test_output_dimensions_preserved():
    img = random_image(11, 23, seed=18)
    mask = CategoricalMask(np.zeros((11, 23), dtype=np.uint8))
    t = compose(TransformParams(rotation=17, scale=1.1), (11.0, 5.0))
    out = warp_image(img, t, InterpMethod.BILINEAR, POLICY)
    assert (out.height, out.width) == (11, 23)
    outm = warp_mask(mask, t, InterpMethod.BICUBIC, POLICY)
    assert (outm.height, outm.width) == (11, 23)
