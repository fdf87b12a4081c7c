import cmath


def close(a, b, rel, abs_floor=0.0):
    a, b = complex(a), complex(b)
    return abs(a - b) <= rel * max(abs(a), abs(b)) + abs_floor


def c(re, im=0.0):
    return complex(re, im)


EPS = cmath.exp(0.25j * cmath.pi)
