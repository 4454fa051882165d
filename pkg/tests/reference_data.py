"""Reference values: worked-example partitions, weights, symmetry-group orders and Bell numbers.

Partitions are written with element names as printed; the tests map
them to element indices through each group's names.
"""

# unitary symmetric partitions, nonidentity blocks only, in listed order
Z4_PARTITIONS = [
    [[1, 2, 3]],
    [[1, 3], [2]],
]
Z2SQ_PARTITIONS = [  # coordinates (a, b) of Z2 x Z2
    [[(0, 1), (1, 0), (1, 1)]],
    [[(1, 0), (0, 1)], [(1, 1)]],
    [[(0, 1), (1, 1)], [(1, 0)]],
    [[(1, 0), (1, 1)], [(0, 1)]],
    [[(1, 0)], [(0, 1)], [(1, 1)]],
]
Z6_PARTITIONS = [
    [[1, 2, 3, 4, 5]],
    [[1, 2, 4, 5], [3]],
    [[1, 3, 5], [2, 4]],
    [[1, 5], [2, 4, 3]],
    [[1, 5], [2, 4], [3]],
]
S3_PARTITIONS = [  # cycles written as in the listing: 12 = (1 2), 123 = (1 2 3)
    [["12", "13", "23", "123", "132"]],
    [["12", "13", "23"], ["123", "132"]],
    [["12"], ["13", "23", "123", "132"]],
    [["13"], ["12", "23", "123", "132"]],
    [["23"], ["12", "13", "123", "132"]],
    [["12", "13"], ["23", "123", "132"]],
    [["12", "23"], ["13", "123", "132"]],
    [["13", "23"], ["12", "123", "132"]],
    [["12"], ["13", "23"], ["123", "132"]],
    [["13"], ["12", "23"], ["123", "132"]],
    [["23"], ["12", "13"], ["123", "132"]],
    [["12"], ["13"], ["23", "123", "132"]],
    [["12"], ["23"], ["13", "123", "132"]],
    [["13"], ["23"], ["12", "123", "132"]],
    [["12"], ["13"], ["23"], ["123", "132"]],
]
Z7_PARTITIONS = [
    [[1, 2, 3, 4, 5, 6]],
    [[1, 6], [2, 3, 4, 5]],
    [[2, 5], [1, 3, 4, 6]],
    [[3, 4], [1, 2, 5, 6]],
    [[1, 6], [2, 5], [3, 4]],
]

# symmetry-group orders listed for the partitions above, in the same order
Z4_GAMMA = [24, 8]
Z2SQ_GAMMA = [24, 8, 8, 8, 4]
Z6_GAMMA = [720, 48, 72, 12, 12]
S3_GAMMA = [720, 72, 48, 48, 48, 12, 12, 12, 12, 12, 12, 6, 6, 6, 6]
Z7_GAMMA = [5040, 14, 14, 14, 14]

# weight rows of the worked examples, columns as printed
Z4_WEIGHTS = {"w1": [1, 1, 1], "w2": [1, 2, 1]}  # columns 1, 2, 3
Z2SQ_COLUMNS = [(1, 0), (1, 1), (0, 1)]
Z2SQ_WEIGHTS = {"w1": [1, 1, 1], "w2": [1, 2, 2], "w3": [2, 2, 1],
                "w4": [2, 1, 2], "w5": [1, 2, 3]}
Z6_WEIGHTS = {"w1": [1, 1, 1, 1, 1], "w2": [1, 1, 2, 1, 1], "w3": [1, 2, 1, 2, 1],
              "w4": [1, 2, 2, 2, 1], "w5": [1, 2, 3, 2, 1]}  # columns 1..5
# homogeneous weight on Z6 as printed: w(1) = w(5) = lam/2, w(2) = w(4) = 3 lam/2, w(3) = 2 lam
Z6_HOMOGENEOUS_OVER_LAMBDA = ["1/2", "3/2", "2", "3/2", "1/2"]
# homogeneous weight on Z4 as printed: lam, 2 lam, lam
Z4_HOMOGENEOUS_OVER_LAMBDA = ["1", "2", "1"]

BELL_1_TO_32 = [
    1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597, 27644437,
    190899322, 1382958545, 10480142147, 82864869804, 682076806159, 5832742205057,
    51724158235372, 474869816156751, 4506715738447323, 44152005855084346,
    445958869294805289, 4638590332229999353, 49631246523618756274,
    545717047936059989389, 6160539404599934652455, 71339801938860275191172,
    846749014511809332450147, 10293358946226376485095653,
    128064670049908713818925644,
]
