# (n=2, k=1, m=1) code over GF(3)
q 3 1
n 2
k 1
m 1
T
0 2 1
1 1 2
systematic
