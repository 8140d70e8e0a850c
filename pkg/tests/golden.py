"""Frozen reference trees: parent arrays transcribed from the drawn examples
(verified against the independent oracles before freezing)."""

# The 16 rooted trees on [4] with one improper edge and deg(1) > 0.
SIXTEEN_DEG1 = {
    (0, 1, 4, 2), (0, 3, 1, 2), (0, 4, 2, 1), (2, 0, 1, 3), (3, 1, 0, 2),
    (4, 1, 2, 0), (0, 3, 1, 1), (0, 4, 1, 1), (0, 1, 4, 1), (3, 1, 0, 3),
    (2, 0, 1, 2), (2, 0, 2, 1), (0, 3, 1, 3), (2, 0, 1, 1), (3, 1, 0, 1),
    (4, 1, 1, 0),
}

# The 16 rooted trees on [4] with two improper edges and deg(4) > 0.
SIXTEEN_DEG4 = {
    (4, 3, 1, 0), (2, 4, 1, 0), (3, 1, 4, 0), (0, 3, 4, 1), (4, 0, 1, 2),
    (4, 1, 0, 3), (0, 4, 1, 3), (2, 0, 4, 1), (3, 4, 0, 1), (4, 1, 4, 0),
    (4, 4, 1, 0), (4, 4, 2, 0), (4, 0, 2, 2), (2, 0, 4, 2), (2, 4, 2, 0),
    (0, 4, 4, 1),
}

# Lowering/lifting pair on [9].
LOWER_PAIR_BEFORE = "2 0 4 2 9 4 2 9 6"
LOWER_PAIR_AFTER = "2 0 4 6 9 9 2 9 2"

# Stem-fold pair on [20] with fold node 11.
FOLD_PAIR_BEFORE = "5 17 8 3 17 7 16 7 0 15 14 16 14 1 9 9 3 12 11 10"
FOLD_PAIR_AFTER = "5 17 8 3 17 7 16 11 11 15 14 16 14 0 9 11 11 12 11 10"

# All-improper tree on [9] and its increasing plane tree.
PLANE_PAIR_TREE = "9 6 7 0 9 4 4 9 6"
PLANE_PAIR_PLANE = "1(5(8(9)) 2(6) 3(7 4))"
