import numpy as np
import pytest

from texdefect.imaging import (
    PgmParseError,
    Rect,
    draw_square_outline,
    extract_window,
    load_pgm,
    quantize,
    save_pgm,
)


def pgm_bytes(header, pixels):
    return header + bytes(pixels)


class TestLoadPgm:
    def test_direct_byte_copy(self):
        img = load_pgm(pgm_bytes(b"P5\n2 2\n255\n", [0, 255, 128, 7]))
        assert img.dtype == np.uint8
        assert img.tolist() == [[0, 255], [128, 7]]

    def test_smallest_valid_image(self):
        img = load_pgm(pgm_bytes(b"P5\n1 1\n255\n", [42]))
        assert img.tolist() == [[42]]

    def test_single_space_header(self):
        img = load_pgm(pgm_bytes(b"P5 2 2 255 ", [0, 255, 128, 7]))
        assert img.tolist() == [[0, 255], [128, 7]]

    def test_header_comments_accepted(self):
        data = pgm_bytes(b"P5\n# camera 3\n2 1\n# still header\n255\n", [9, 200])
        assert load_pgm(data).tolist() == [[9, 200]]

    def test_truncated_pixel_data(self):
        with pytest.raises(PgmParseError, match="truncated"):
            load_pgm(pgm_bytes(b"P5\n2 2\n255\n", [1, 2, 3]))

    def test_bad_magic(self):
        with pytest.raises(PgmParseError, match="magic"):
            load_pgm(pgm_bytes(b"P2\n1 1\n255\n", [1]))

    def test_maxval_above_255(self):
        with pytest.raises(PgmParseError, match="maxval"):
            load_pgm(pgm_bytes(b"P5\n1 1\n65535\n", [1, 1]))

    def test_non_numeric_header(self):
        with pytest.raises(PgmParseError, match="integer"):
            load_pgm(b"P5\nwide 2\n255\n" + bytes(4))

    def test_zero_dimension(self):
        with pytest.raises(PgmParseError, match="1x1"):
            load_pgm(b"P5\n0 2\n255\n")

    def test_empty_input(self):
        with pytest.raises(PgmParseError):
            load_pgm(b"")


class TestSavePgm:
    def test_round_trip_examples(self):
        for pixels in ([[42]], [[0, 255], [128, 7]]):
            img = np.asarray(pixels, dtype=np.uint8)
            again = load_pgm(save_pgm(img))
            assert np.array_equal(again, img)

    def test_round_trip_random_images(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            h, w = rng.integers(1, 40, size=2)
            img = rng.integers(0, 256, size=(h, w), dtype=np.uint8)
            assert np.array_equal(load_pgm(save_pgm(img)), img)

    def test_never_writes_comments(self):
        data = save_pgm(np.zeros((3, 3), dtype=np.uint8))
        header = data.split(b"\n", 3)
        assert header[0] == b"P5"
        assert b"#" not in data[:16]

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            save_pgm(np.array([[300]]))


class TestQuantize:
    def test_identity_at_256(self):
        img = np.arange(256, dtype=np.uint8).reshape(16, 16)
        assert np.array_equal(quantize(img, 256), img)

    @pytest.mark.parametrize(
        "pixel,levels,expected",
        [(255, 256, 255), (255, 8, 7), (0, 8, 0), (128, 2, 1), (127, 2, 0)],
    )
    def test_binning_rule(self, pixel, levels, expected):
        assert quantize(np.array([[pixel]], dtype=np.uint8), levels)[0, 0] == expected

    @pytest.mark.parametrize("levels", [1, 0, 257, 300])
    def test_rejects_bad_level_count(self, levels):
        with pytest.raises(ValueError):
            quantize(np.zeros((2, 2), dtype=np.uint8), levels)

    def test_monotone_and_surjective(self):
        ramp = np.arange(256, dtype=np.uint8).reshape(1, 256)
        for levels in (2, 3, 8, 100, 256):
            out = quantize(ramp, levels)
            assert np.all(np.diff(out.astype(int)) >= 0)
            assert set(np.unique(out)) == set(range(levels))


class TestExtractWindow:
    def test_full_image_rect(self):
        img = np.arange(12, dtype=np.uint8).reshape(3, 4)
        out = extract_window(img, Rect(0, 0, 4, 3))
        assert np.array_equal(out, img)

    def test_single_pixel(self):
        img = np.arange(12, dtype=np.uint8).reshape(3, 4)
        assert extract_window(img, Rect(0, 0, 1, 1)).tolist() == [[0]]

    def test_interior_of_ramp(self):
        ramp = np.arange(16, dtype=np.uint8).reshape(4, 4)
        out = extract_window(ramp, Rect(1, 1, 2, 2))
        assert out.tolist() == [[5, 6], [9, 10]]

    def test_source_unmodified(self):
        img = np.arange(16, dtype=np.uint8).reshape(4, 4)
        before = img.copy()
        window = extract_window(img, Rect(1, 1, 2, 2))
        window[:] = 0
        assert np.array_equal(img, before)

    def test_out_of_bounds(self):
        img = np.zeros((4, 4), dtype=np.uint8)
        with pytest.raises(ValueError):
            extract_window(img, Rect(2, 2, 3, 3))

    def test_matches_offset_pixels_random(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            h, w = rng.integers(2, 20, size=2)
            img = rng.integers(0, 256, size=(h, w), dtype=np.uint8)
            ww = int(rng.integers(1, w + 1))
            wh = int(rng.integers(1, h + 1))
            x = int(rng.integers(0, w - ww + 1))
            y = int(rng.integers(0, h - wh + 1))
            out = extract_window(img, Rect(x, y, ww, wh))
            for i in range(wh):
                for j in range(ww):
                    assert out[i, j] == img[y + i, x + j]


class TestDrawSquareOutline:
    def test_3x3_thickness_1(self):
        img = np.zeros((3, 3), dtype=np.uint8)
        out = draw_square_outline(img, Rect(0, 0, 3, 3), level=255, thickness=1)
        assert out[1, 1] == 0
        assert int(np.count_nonzero(out == 255)) == 8

    def test_changes_exactly_the_border_band(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            h, w = rng.integers(6, 30, size=2)
            img = rng.integers(0, 255, size=(h, w), dtype=np.uint8)  # keep 255 free for the band
            rw = int(rng.integers(4, w + 1))
            rh = int(rng.integers(4, h + 1))
            x = int(rng.integers(0, w - rw + 1))
            y = int(rng.integers(0, h - rh + 1))
            t = int(rng.integers(1, min(rw, rh) // 2 + 1))
            rect = Rect(x, y, rw, rh)
            out = draw_square_outline(img, rect, level=255, thickness=t)
            band = rw * rh - (rw - 2 * t) * (rh - 2 * t)
            changed = np.argwhere(out != img)
            assert len(changed) == band
            for r, c in changed:
                assert out[r, c] == 255
                inside = y <= r < y + rh and x <= c < x + rw
                on_band = inside and (
                    r < y + t or r >= y + rh - t or c < x + t or c >= x + rw - t
                )
                assert on_band

    def test_interior_and_exterior_untouched(self):
        img = np.full((10, 10), 7, dtype=np.uint8)
        out = draw_square_outline(img, Rect(2, 2, 6, 6), level=255, thickness=2)
        assert out[4:6, 4:6].tolist() == [[7, 7], [7, 7]]
        assert np.array_equal(out[:2], img[:2])
        assert np.array_equal(out[8:], img[8:])

    @pytest.mark.parametrize("thickness", [0, -1, 2])
    def test_invalid_thickness(self, thickness):
        img = np.zeros((5, 5), dtype=np.uint8)
        with pytest.raises(ValueError):
            draw_square_outline(img, Rect(0, 0, 3, 3), thickness=thickness)

    def test_input_not_mutated(self):
        img = np.zeros((5, 5), dtype=np.uint8)
        draw_square_outline(img, Rect(0, 0, 4, 4), thickness=1)
        assert not img.any()
