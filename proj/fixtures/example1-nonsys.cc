# same code, nonsystematic constraint generator
q 2 1
n 2
k 1
m 2
T
0 1 0 1
1 1 0 0
1 1 1 0
