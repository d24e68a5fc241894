#include "vqx/circuits.hpp"

namespace vqx {

const char* bundled_catalog_text() {
    return R"CATALOG(
# Bundled circuit catalog: single-layer patterns of the 19 reference
# ansatz architectures at 4 and 8 qubits. One gate per line:
#   <kind> <qubits,comma-separated> [slot=<k>|angle=<radians>]
# Two-qubit gates list control,target. Slots are per-layer parameter
# indices; the loader replicates layers with fresh slots.
# Replace with your own file via the catalog loader to change the set.

template circuit_01 qubits=4 params_per_layer=8
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7

template circuit_02 qubits=4 params_per_layer=8
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
cx 3,2
cx 2,1
cx 1,0

template circuit_03 qubits=4 params_per_layer=11
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crz 3,2 slot=8
crz 2,1 slot=9
crz 1,0 slot=10

template circuit_04 qubits=4 params_per_layer=11
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crx 3,2 slot=8
crx 2,1 slot=9
crx 1,0 slot=10

template circuit_05 qubits=4 params_per_layer=28
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crz 3,2 slot=8
crz 3,1 slot=9
crz 3,0 slot=10
crz 2,3 slot=11
crz 2,1 slot=12
crz 2,0 slot=13
crz 1,3 slot=14
crz 1,2 slot=15
crz 1,0 slot=16
crz 0,3 slot=17
crz 0,2 slot=18
crz 0,1 slot=19
rx 0 slot=20
rx 1 slot=21
rx 2 slot=22
rx 3 slot=23
rz 0 slot=24
rz 1 slot=25
rz 2 slot=26
rz 3 slot=27

template circuit_06 qubits=4 params_per_layer=28
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crx 3,2 slot=8
crx 3,1 slot=9
crx 3,0 slot=10
crx 2,3 slot=11
crx 2,1 slot=12
crx 2,0 slot=13
crx 1,3 slot=14
crx 1,2 slot=15
crx 1,0 slot=16
crx 0,3 slot=17
crx 0,2 slot=18
crx 0,1 slot=19
rx 0 slot=20
rx 1 slot=21
rx 2 slot=22
rx 3 slot=23
rz 0 slot=24
rz 1 slot=25
rz 2 slot=26
rz 3 slot=27

template circuit_07 qubits=4 params_per_layer=19
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crz 1,0 slot=8
crz 3,2 slot=9
rx 0 slot=10
rx 1 slot=11
rx 2 slot=12
rx 3 slot=13
rz 0 slot=14
rz 1 slot=15
rz 2 slot=16
rz 3 slot=17
crz 2,1 slot=18

template circuit_08 qubits=4 params_per_layer=19
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crx 1,0 slot=8
crx 3,2 slot=9
rx 0 slot=10
rx 1 slot=11
rx 2 slot=12
rx 3 slot=13
rz 0 slot=14
rz 1 slot=15
rz 2 slot=16
rz 3 slot=17
crx 2,1 slot=18

template circuit_09 qubits=4 params_per_layer=4
h 0
h 1
h 2
h 3
cz 3,2
cz 2,1
cz 1,0
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3

template circuit_10 qubits=4 params_per_layer=8
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
cz 3,2
cz 2,1
cz 1,0
cz 0,3
ry 0 slot=4
ry 1 slot=5
ry 2 slot=6
ry 3 slot=7

template circuit_11 qubits=4 params_per_layer=12
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
cx 1,0
cx 3,2
ry 1 slot=8
ry 2 slot=9
rz 1 slot=10
rz 2 slot=11
cx 2,1

template circuit_12 qubits=4 params_per_layer=12
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
cz 1,0
cz 3,2
ry 1 slot=8
ry 2 slot=9
rz 1 slot=10
rz 2 slot=11
cz 2,1

template circuit_13 qubits=4 params_per_layer=16
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
crz 3,0 slot=4
crz 2,3 slot=5
crz 1,2 slot=6
crz 0,1 slot=7
ry 0 slot=8
ry 1 slot=9
ry 2 slot=10
ry 3 slot=11
crz 3,2 slot=12
crz 0,3 slot=13
crz 1,0 slot=14
crz 2,1 slot=15

template circuit_14 qubits=4 params_per_layer=16
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
crx 3,0 slot=4
crx 2,3 slot=5
crx 1,2 slot=6
crx 0,1 slot=7
ry 0 slot=8
ry 1 slot=9
ry 2 slot=10
ry 3 slot=11
crx 3,2 slot=12
crx 0,3 slot=13
crx 1,0 slot=14
crx 2,1 slot=15

template circuit_15 qubits=4 params_per_layer=8
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
cx 3,0
cx 2,3
cx 1,2
cx 0,1
ry 0 slot=4
ry 1 slot=5
ry 2 slot=6
ry 3 slot=7
cx 3,2
cx 0,3
cx 1,0
cx 2,1

template circuit_16 qubits=4 params_per_layer=11
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crz 1,0 slot=8
crz 3,2 slot=9
crz 2,1 slot=10

template circuit_17 qubits=4 params_per_layer=11
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crx 1,0 slot=8
crx 3,2 slot=9
crx 2,1 slot=10

template circuit_18 qubits=4 params_per_layer=12
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crz 3,0 slot=8
crz 2,3 slot=9
crz 1,2 slot=10
crz 0,1 slot=11

template circuit_19 qubits=4 params_per_layer=12
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rz 0 slot=4
rz 1 slot=5
rz 2 slot=6
rz 3 slot=7
crx 3,0 slot=8
crx 2,3 slot=9
crx 1,2 slot=10
crx 0,1 slot=11

template circuit_01 qubits=8 params_per_layer=16
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15

template circuit_02 qubits=8 params_per_layer=16
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
cx 7,6
cx 6,5
cx 5,4
cx 4,3
cx 3,2
cx 2,1
cx 1,0

template circuit_03 qubits=8 params_per_layer=23
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crz 7,6 slot=16
crz 6,5 slot=17
crz 5,4 slot=18
crz 4,3 slot=19
crz 3,2 slot=20
crz 2,1 slot=21
crz 1,0 slot=22

template circuit_04 qubits=8 params_per_layer=23
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crx 7,6 slot=16
crx 6,5 slot=17
crx 5,4 slot=18
crx 4,3 slot=19
crx 3,2 slot=20
crx 2,1 slot=21
crx 1,0 slot=22

template circuit_05 qubits=8 params_per_layer=88
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crz 7,6 slot=16
crz 7,5 slot=17
crz 7,4 slot=18
crz 7,3 slot=19
crz 7,2 slot=20
crz 7,1 slot=21
crz 7,0 slot=22
crz 6,7 slot=23
crz 6,5 slot=24
crz 6,4 slot=25
crz 6,3 slot=26
crz 6,2 slot=27
crz 6,1 slot=28
crz 6,0 slot=29
crz 5,7 slot=30
crz 5,6 slot=31
crz 5,4 slot=32
crz 5,3 slot=33
crz 5,2 slot=34
crz 5,1 slot=35
crz 5,0 slot=36
crz 4,7 slot=37
crz 4,6 slot=38
crz 4,5 slot=39
crz 4,3 slot=40
crz 4,2 slot=41
crz 4,1 slot=42
crz 4,0 slot=43
crz 3,7 slot=44
crz 3,6 slot=45
crz 3,5 slot=46
crz 3,4 slot=47
crz 3,2 slot=48
crz 3,1 slot=49
crz 3,0 slot=50
crz 2,7 slot=51
crz 2,6 slot=52
crz 2,5 slot=53
crz 2,4 slot=54
crz 2,3 slot=55
crz 2,1 slot=56
crz 2,0 slot=57
crz 1,7 slot=58
crz 1,6 slot=59
crz 1,5 slot=60
crz 1,4 slot=61
crz 1,3 slot=62
crz 1,2 slot=63
crz 1,0 slot=64
crz 0,7 slot=65
crz 0,6 slot=66
crz 0,5 slot=67
crz 0,4 slot=68
crz 0,3 slot=69
crz 0,2 slot=70
crz 0,1 slot=71
rx 0 slot=72
rx 1 slot=73
rx 2 slot=74
rx 3 slot=75
rx 4 slot=76
rx 5 slot=77
rx 6 slot=78
rx 7 slot=79
rz 0 slot=80
rz 1 slot=81
rz 2 slot=82
rz 3 slot=83
rz 4 slot=84
rz 5 slot=85
rz 6 slot=86
rz 7 slot=87

template circuit_06 qubits=8 params_per_layer=88
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crx 7,6 slot=16
crx 7,5 slot=17
crx 7,4 slot=18
crx 7,3 slot=19
crx 7,2 slot=20
crx 7,1 slot=21
crx 7,0 slot=22
crx 6,7 slot=23
crx 6,5 slot=24
crx 6,4 slot=25
crx 6,3 slot=26
crx 6,2 slot=27
crx 6,1 slot=28
crx 6,0 slot=29
crx 5,7 slot=30
crx 5,6 slot=31
crx 5,4 slot=32
crx 5,3 slot=33
crx 5,2 slot=34
crx 5,1 slot=35
crx 5,0 slot=36
crx 4,7 slot=37
crx 4,6 slot=38
crx 4,5 slot=39
crx 4,3 slot=40
crx 4,2 slot=41
crx 4,1 slot=42
crx 4,0 slot=43
crx 3,7 slot=44
crx 3,6 slot=45
crx 3,5 slot=46
crx 3,4 slot=47
crx 3,2 slot=48
crx 3,1 slot=49
crx 3,0 slot=50
crx 2,7 slot=51
crx 2,6 slot=52
crx 2,5 slot=53
crx 2,4 slot=54
crx 2,3 slot=55
crx 2,1 slot=56
crx 2,0 slot=57
crx 1,7 slot=58
crx 1,6 slot=59
crx 1,5 slot=60
crx 1,4 slot=61
crx 1,3 slot=62
crx 1,2 slot=63
crx 1,0 slot=64
crx 0,7 slot=65
crx 0,6 slot=66
crx 0,5 slot=67
crx 0,4 slot=68
crx 0,3 slot=69
crx 0,2 slot=70
crx 0,1 slot=71
rx 0 slot=72
rx 1 slot=73
rx 2 slot=74
rx 3 slot=75
rx 4 slot=76
rx 5 slot=77
rx 6 slot=78
rx 7 slot=79
rz 0 slot=80
rz 1 slot=81
rz 2 slot=82
rz 3 slot=83
rz 4 slot=84
rz 5 slot=85
rz 6 slot=86
rz 7 slot=87

template circuit_07 qubits=8 params_per_layer=39
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crz 1,0 slot=16
crz 3,2 slot=17
crz 5,4 slot=18
crz 7,6 slot=19
rx 0 slot=20
rx 1 slot=21
rx 2 slot=22
rx 3 slot=23
rx 4 slot=24
rx 5 slot=25
rx 6 slot=26
rx 7 slot=27
rz 0 slot=28
rz 1 slot=29
rz 2 slot=30
rz 3 slot=31
rz 4 slot=32
rz 5 slot=33
rz 6 slot=34
rz 7 slot=35
crz 2,1 slot=36
crz 4,3 slot=37
crz 6,5 slot=38

template circuit_08 qubits=8 params_per_layer=39
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crx 1,0 slot=16
crx 3,2 slot=17
crx 5,4 slot=18
crx 7,6 slot=19
rx 0 slot=20
rx 1 slot=21
rx 2 slot=22
rx 3 slot=23
rx 4 slot=24
rx 5 slot=25
rx 6 slot=26
rx 7 slot=27
rz 0 slot=28
rz 1 slot=29
rz 2 slot=30
rz 3 slot=31
rz 4 slot=32
rz 5 slot=33
rz 6 slot=34
rz 7 slot=35
crx 2,1 slot=36
crx 4,3 slot=37
crx 6,5 slot=38

template circuit_09 qubits=8 params_per_layer=8
h 0
h 1
h 2
h 3
h 4
h 5
h 6
h 7
cz 7,6
cz 6,5
cz 5,4
cz 4,3
cz 3,2
cz 2,1
cz 1,0
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7

template circuit_10 qubits=8 params_per_layer=16
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
ry 4 slot=4
ry 5 slot=5
ry 6 slot=6
ry 7 slot=7
cz 7,6
cz 6,5
cz 5,4
cz 4,3
cz 3,2
cz 2,1
cz 1,0
cz 0,7
ry 0 slot=8
ry 1 slot=9
ry 2 slot=10
ry 3 slot=11
ry 4 slot=12
ry 5 slot=13
ry 6 slot=14
ry 7 slot=15

template circuit_11 qubits=8 params_per_layer=28
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
ry 4 slot=4
ry 5 slot=5
ry 6 slot=6
ry 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
cx 1,0
cx 3,2
cx 5,4
cx 7,6
ry 1 slot=16
ry 2 slot=17
ry 3 slot=18
ry 4 slot=19
ry 5 slot=20
ry 6 slot=21
rz 1 slot=22
rz 2 slot=23
rz 3 slot=24
rz 4 slot=25
rz 5 slot=26
rz 6 slot=27
cx 2,1
cx 4,3
cx 6,5

template circuit_12 qubits=8 params_per_layer=28
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
ry 4 slot=4
ry 5 slot=5
ry 6 slot=6
ry 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
cz 1,0
cz 3,2
cz 5,4
cz 7,6
ry 1 slot=16
ry 2 slot=17
ry 3 slot=18
ry 4 slot=19
ry 5 slot=20
ry 6 slot=21
rz 1 slot=22
rz 2 slot=23
rz 3 slot=24
rz 4 slot=25
rz 5 slot=26
rz 6 slot=27
cz 2,1
cz 4,3
cz 6,5

template circuit_13 qubits=8 params_per_layer=32
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
ry 4 slot=4
ry 5 slot=5
ry 6 slot=6
ry 7 slot=7
crz 7,0 slot=8
crz 6,7 slot=9
crz 5,6 slot=10
crz 4,5 slot=11
crz 3,4 slot=12
crz 2,3 slot=13
crz 1,2 slot=14
crz 0,1 slot=15
ry 0 slot=16
ry 1 slot=17
ry 2 slot=18
ry 3 slot=19
ry 4 slot=20
ry 5 slot=21
ry 6 slot=22
ry 7 slot=23
crz 7,6 slot=24
crz 0,7 slot=25
crz 1,0 slot=26
crz 2,1 slot=27
crz 3,2 slot=28
crz 4,3 slot=29
crz 5,4 slot=30
crz 6,5 slot=31

template circuit_14 qubits=8 params_per_layer=32
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
ry 4 slot=4
ry 5 slot=5
ry 6 slot=6
ry 7 slot=7
crx 7,0 slot=8
crx 6,7 slot=9
crx 5,6 slot=10
crx 4,5 slot=11
crx 3,4 slot=12
crx 2,3 slot=13
crx 1,2 slot=14
crx 0,1 slot=15
ry 0 slot=16
ry 1 slot=17
ry 2 slot=18
ry 3 slot=19
ry 4 slot=20
ry 5 slot=21
ry 6 slot=22
ry 7 slot=23
crx 7,6 slot=24
crx 0,7 slot=25
crx 1,0 slot=26
crx 2,1 slot=27
crx 3,2 slot=28
crx 4,3 slot=29
crx 5,4 slot=30
crx 6,5 slot=31

template circuit_15 qubits=8 params_per_layer=16
ry 0 slot=0
ry 1 slot=1
ry 2 slot=2
ry 3 slot=3
ry 4 slot=4
ry 5 slot=5
ry 6 slot=6
ry 7 slot=7
cx 7,0
cx 6,7
cx 5,6
cx 4,5
cx 3,4
cx 2,3
cx 1,2
cx 0,1
ry 0 slot=8
ry 1 slot=9
ry 2 slot=10
ry 3 slot=11
ry 4 slot=12
ry 5 slot=13
ry 6 slot=14
ry 7 slot=15
cx 7,6
cx 0,7
cx 1,0
cx 2,1
cx 3,2
cx 4,3
cx 5,4
cx 6,5

template circuit_16 qubits=8 params_per_layer=23
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crz 1,0 slot=16
crz 3,2 slot=17
crz 5,4 slot=18
crz 7,6 slot=19
crz 2,1 slot=20
crz 4,3 slot=21
crz 6,5 slot=22

template circuit_17 qubits=8 params_per_layer=23
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crx 1,0 slot=16
crx 3,2 slot=17
crx 5,4 slot=18
crx 7,6 slot=19
crx 2,1 slot=20
crx 4,3 slot=21
crx 6,5 slot=22

template circuit_18 qubits=8 params_per_layer=24
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crz 7,0 slot=16
crz 6,7 slot=17
crz 5,6 slot=18
crz 4,5 slot=19
crz 3,4 slot=20
crz 2,3 slot=21
crz 1,2 slot=22
crz 0,1 slot=23

template circuit_19 qubits=8 params_per_layer=24
rx 0 slot=0
rx 1 slot=1
rx 2 slot=2
rx 3 slot=3
rx 4 slot=4
rx 5 slot=5
rx 6 slot=6
rx 7 slot=7
rz 0 slot=8
rz 1 slot=9
rz 2 slot=10
rz 3 slot=11
rz 4 slot=12
rz 5 slot=13
rz 6 slot=14
rz 7 slot=15
crx 7,0 slot=16
crx 6,7 slot=17
crx 5,6 slot=18
crx 4,5 slot=19
crx 3,4 slot=20
crx 2,3 slot=21
crx 1,2 slot=22
crx 0,1 slot=23
)CATALOG";
}

} // namespace vqx
