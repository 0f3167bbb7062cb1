"""Embedded fixtures shared across test modules."""

from chooselab.plane import rotations_from_faces


def quad_wheel():
    """A degree-5 hub whose five petals are (5,3,4,3)-faces: rim vertices of
    degree 3, mid-ring of degree 4, a degree-2 skirt, quad inner faces."""
    inner = [[20, 0 + i, 10 + i, 0 + (i + 1) % 5] for i in range(5)]
    middle = [[10 + i, 15 + i, 10 + (i + 1) % 5, (i + 1) % 5]
              for i in range(5)]
    ring = []
    for i in range(5):
        ring.extend([15 + i, 10 + (i + 1) % 5])
    return rotations_from_faces(inner + middle + [list(reversed(ring))])


def hex_pair():
    """Two hexagons sharing an edge; no 4-faces at all."""
    faces = [[0, 1, 2, 3, 4, 5], [1, 0, 6, 7, 8, 9],
             [0, 5, 4, 3, 2, 1, 9, 8, 7, 6]]
    return rotations_from_faces(faces)
