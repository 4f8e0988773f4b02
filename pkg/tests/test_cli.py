"""Command-line tests: verbs, exit codes, binding forms, output bytes."""

import math

import numpy as np
import pytest

from logimg.blur import gaussian_correction
from logimg.cli import run
from logimg.contrast import contrast_map
from logimg.image import constant_image, img_add, img_scale, img_sub, l2_dot, l2_norm
from logimg.raster import (
    RasterBuffer,
    encode_pnm,
    from_model,
    read_pnm,
    to_model,
    write_pnm,
    _round_half_away,
)
from logimg.synth import checkerboard, color_gradient, gray_gradient


@pytest.fixture
def gray_file(tmp_path):
    path = tmp_path / "in.pgm"
    write_pnm(path, gray_gradient(8, 6))
    return str(path)


@pytest.fixture
def color_file(tmp_path):
    path = tmp_path / "in.ppm"
    write_pnm(path, color_gradient(8, 6))
    return str(path)


# ---------------------------------------------------------------------------
# info and stats


def test_info_prints_dimensions_and_kind(color_file, capsys):
    assert run(["info", "-i", color_file]) == 0
    assert capsys.readouterr().out == "width=8\nheight=6\nkind=color\n"


def test_info_gray_kind(gray_file, capsys):
    assert run(["info", "-i", gray_file]) == 0
    assert capsys.readouterr().out.endswith("kind=gray\n")


def test_stats_prints_norm_line(gray_file, capsys):
    f = to_model(read_pnm(gray_file))
    assert run(["stats", "-i", gray_file]) == 0
    out = capsys.readouterr().out
    assert out == f"l2_norm={l2_norm(f):.15g}\n"


def test_stats_norm_of_mid_gray(tmp_path, capsys):
    # code 128 maps to 1/256, so the norm is sqrt(W*H) * atanh(1/256)
    path = tmp_path / "flat.pgm"
    write_pnm(path, RasterBuffer(np.full((6, 8), 128, dtype=np.uint8)))
    assert run(["stats", "-i", str(path)]) == 0
    printed = float(capsys.readouterr().out.split("=")[1])
    assert abs(printed - math.sqrt(48.0) * math.atanh(1.0 / 256.0)) < 1e-12


def test_stats_against_prints_dot_line(gray_file, tmp_path, capsys):
    other = tmp_path / "other.pgm"
    write_pnm(other, checkerboard(8, 6))
    assert run(["stats", "-i", gray_file, "--against", str(other)]) == 0
    out = capsys.readouterr().out.splitlines()
    f = to_model(read_pnm(gray_file))
    g = to_model(read_pnm(str(other)))
    assert out[0] == f"l2_norm={l2_norm(f):.15g}"
    assert out[1] == f"l2_dot={l2_dot(f, g):.15g}"


def test_stats_against_mismatch_is_a_format_error(gray_file, tmp_path, capsys):
    smaller = tmp_path / "small.pgm"
    write_pnm(smaller, gray_gradient(4, 3))
    assert run(["stats", "-i", gray_file, "--against", str(smaller)]) == 2
    assert capsys.readouterr().err.startswith("logimg: ")
    mixed = tmp_path / "mixed.ppm"
    write_pnm(mixed, color_gradient(8, 6))
    assert run(["stats", "-i", gray_file, "--against", str(mixed)]) == 2


# ---------------------------------------------------------------------------
# apply


def test_apply_writes_hand_composed_bytes(gray_file, tmp_path):
    out = tmp_path / "out.pgm"
    assert run(["apply", "--expr", "f <+> 0.93", "-i", gray_file, "-o", str(out)]) == 0
    f = to_model(read_pnm(gray_file))
    want = img_add(f, constant_image(f.width, f.height, 0.93))
    assert out.read_bytes() == encode_pnm(from_model(want))


def test_apply_identity_round_trips_bytes(gray_file, tmp_path):
    out = tmp_path / "out.pgm"
    assert run(["apply", "--expr", "f", "-i", gray_file, "-o", str(out)]) == 0
    assert out.read_bytes() == open(gray_file, "rb").read()


def test_apply_is_deterministic(color_file, tmp_path):
    argv = ["apply", "--expr", "2 <x> (f <+> 0.5)", "-i", color_file]
    out1, out2 = tmp_path / "a.ppm", tmp_path / "b.ppm"
    assert run(argv + ["-o", str(out1)]) == 0
    assert run(argv + ["-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_apply_gray_and_color_bindings(color_file, tmp_path):
    out = tmp_path / "out.ppm"
    argv = [
        "apply", "--expr", "0.95 <x> f <-> 0.76 <x> v",
        "--bind", "v=-0.865,-0.692,0.210",
        "-i", color_file, "-o", str(out),
    ]
    assert run(argv) == 0
    f = to_model(read_pnm(color_file))
    v = constant_image(f.width, f.height, (-0.865, -0.692, 0.210))
    want = img_sub(img_scale(0.95, f), img_scale(0.76, v))
    assert out.read_bytes() == encode_pnm(from_model(want))


def test_apply_image_binding(gray_file, tmp_path):
    second = tmp_path / "g.pgm"
    write_pnm(second, checkerboard(8, 6))
    out = tmp_path / "out.pgm"
    argv = ["apply", "--expr", "f <-> g", "--bind", f"g=@{second}",
            "-i", gray_file, "-o", str(out)]
    assert run(argv) == 0
    f = to_model(read_pnm(gray_file))
    g = to_model(read_pnm(str(second)))
    assert out.read_bytes() == encode_pnm(from_model(img_sub(f, g)))


def test_apply_blur_binding(gray_file, tmp_path):
    out = tmp_path / "out.pgm"
    argv = ["apply", "--expr", "f <-> I_G", "--bind", "I_G=blur:2",
            "-i", gray_file, "-o", str(out)]
    assert run(argv) == 0
    f = to_model(read_pnm(gray_file))
    want = img_sub(f, gaussian_correction(f, 2.0))
    assert out.read_bytes() == encode_pnm(from_model(want))


# ---------------------------------------------------------------------------
# contrast


def test_contrast_magnitude_bytes(gray_file, tmp_path):
    out = tmp_path / "c.pgm"
    argv = ["contrast", "--mode", "pixel", "-i", gray_file, "-o", str(out)]
    assert run(argv) == 0
    cmap = contrast_map(to_model(read_pnm(gray_file)), "pixel", 4)
    codes = np.clip(_round_half_away(np.abs(cmap.data) * 255.0), 0.0, 255.0)
    want = encode_pnm(RasterBuffer(codes.astype(np.uint8)))
    assert out.read_bytes() == want


def test_contrast_signed_bytes(gray_file, tmp_path):
    out = tmp_path / "c.pgm"
    argv = ["contrast", "--mode", "horizontal", "--display", "signed",
            "-i", gray_file, "-o", str(out)]
    assert run(argv) == 0
    cmap = contrast_map(to_model(read_pnm(gray_file)), "horizontal", 4)
    assert out.read_bytes() == encode_pnm(from_model(cmap))


def test_contrast_neighborhood_choices(tmp_path):
    path = tmp_path / "in.pgm"
    write_pnm(path, checkerboard(8, 8, tile=1))
    out4, out8 = tmp_path / "c4.pgm", tmp_path / "c8.pgm"
    base = ["contrast", "--mode", "pixel", "-i", str(path)]
    assert run(base + ["-o", str(out4)]) == 0
    assert run(base + ["--neighborhood", "8", "-o", str(out8)]) == 0
    assert out4.read_bytes() != out8.read_bytes()


def test_contrast_color_input(color_file, tmp_path):
    # channel maps collapse to one plane, so the output is single channel
    out = tmp_path / "c.pgm"
    assert run(["contrast", "--mode", "pixel", "-i", color_file, "-o", str(out)]) == 0
    assert read_pnm(str(out)).channels == 1


def test_contrast_on_single_pixel_is_a_format_error(tmp_path, capsys):
    path = tmp_path / "one.pgm"
    write_pnm(path, RasterBuffer(np.array([[7]], dtype=np.uint8)))
    argv = ["contrast", "--mode", "pixel", "-i", str(path), "-o", str(tmp_path / "o.pgm")]
    assert run(argv) == 2
    assert capsys.readouterr().err.startswith("logimg: ")


# ---------------------------------------------------------------------------
# exit codes


def test_usage_errors_exit_1(capsys):
    assert run([]) == 1
    assert run(["frobnicate"]) == 1
    assert run(["apply", "-i", "x.pgm", "-o", "y.pgm"]) == 1  # missing --expr
    assert run(["contrast", "--mode", "diagonal", "-i", "x", "-o", "y"]) == 1
    assert run(["contrast", "--mode", "pixel", "--neighborhood", "6", "-i", "x", "-o", "y"]) == 1
    err = capsys.readouterr().err
    assert "logimg: error:" in err


def test_help_exits_0(capsys):
    assert run(["--help"]) == 0
    assert run(["apply", "--help"]) == 0
    assert "usage" in capsys.readouterr().out


def test_io_and_format_errors_exit_2(tmp_path, gray_file, capsys):
    missing = str(tmp_path / "missing.pgm")
    assert run(["info", "-i", missing]) == 2
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(b"BM not a raster")
    assert run(["info", "-i", str(bad)]) == 2
    ascii_file = tmp_path / "ascii.pgm"
    ascii_file.write_bytes(b"P2\n2 2\n255\n0 0 0 0\n")
    assert run(["info", "-i", str(ascii_file)]) == 2
    short = tmp_path / "short.pgm"
    short.write_bytes(b"P5\n4 4\n255\n" + bytes(7))
    assert run(["info", "-i", str(short)]) == 2
    nodir = str(tmp_path / "no" / "such" / "dir" / "o.pgm")
    assert run(["apply", "--expr", "f", "-i", gray_file, "-o", nodir]) == 2
    assert capsys.readouterr().err.count("logimg: ") == 5


def test_expression_errors_exit_3(gray_file, tmp_path, capsys):
    out = str(tmp_path / "o.pgm")
    base = ["apply", "-i", gray_file, "-o", out]
    assert run(base + ["--expr", "f <+>"]) == 3
    assert run(base + ["--expr", "f <+> g"]) == 3
    assert run(base + ["--expr", "f <+> (0.1, 0.2, 0.3)"]) == 3
    err = capsys.readouterr().err
    assert err.count("logimg: ") == 3


def test_binding_errors_exit_3(gray_file, tmp_path):
    out = str(tmp_path / "o.pgm")
    base = ["apply", "--expr", "f", "-i", gray_file, "-o", out]
    assert run(base + ["--bind", "c"]) == 3
    assert run(base + ["--bind", "c="]) == 3
    assert run(base + ["--bind", "2c=0.5"]) == 3
    assert run(base + ["--bind", "f=0.5"]) == 3
    assert run(base + ["--bind", "c=0.5", "--bind", "c=0.6"]) == 3
    assert run(base + ["--bind", "c=1.5"]) == 3
    assert run(base + ["--bind", "v=0.1,0.2"]) == 3
    assert run(base + ["--bind", "I_G=blur:-1"]) == 3
    assert run(base + ["--bind", "I_G=blur:x"]) == 3


def test_binding_shape_mismatch_exits_3(gray_file, tmp_path):
    small = tmp_path / "small.pgm"
    write_pnm(small, gray_gradient(3, 3))
    out = str(tmp_path / "o.pgm")
    argv = ["apply", "--expr", "f <-> g", "--bind", f"g=@{small}",
            "-i", gray_file, "-o", out]
    assert run(argv) == 3


def test_binding_missing_image_file_exits_2(gray_file, tmp_path):
    out = str(tmp_path / "o.pgm")
    argv = ["apply", "--expr", "f <-> g", "--bind", "g=@nope.pgm",
            "-i", gray_file, "-o", out]
    assert run(argv) == 2
