"""Brute-force image sizes for the growth reference, independent of the C++ code.

Prints the values frozen in test_grid.cpp and the acceptance suite.
"""
import math

SCHEDULE = [8, 16, 32, 64]


def image_size(f, n):
    pts = range(n)
    return len({f(a, b) for a in pts for b in pts})


def slope(xs, ys):
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    k = len(xs)
    sx, sy = sum(lx), sum(ly)
    sxx = sum(x * x for x in lx)
    sxy = sum(x * y for x, y in zip(lx, ly))
    return (k * sxy - sx * sy) / (k * sxx - sx * sx)


if __name__ == "__main__":
    sizes = [image_size(lambda a, b: a * a + a * b + b * b, n) for n in SCHEDULE]
    print("u^2+uv+v^2 on 0..n-1:", sizes, repr(slope(SCHEDULE, sizes)))
