// Encoded classification of f5^2 + f2^5 at an intersection point of the two curves.
//
//   row KEY | IOTA | TEMPLATE | VARIABLES
//   dagger CLASS | HEAD | TEMPLATE | VARIABLES
//
// KEY is CaseLabel::key(). "[expr]" is an integer expression in the variables;
// a variable is "v=lo..hi" (bounds may be expressions of earlier variables) or
// "v=a,b,c". A dagger line adds its entries to every row of CLASS (smooth:
// keys ending in -1, lines: keys ending in -2, linear: keys starting with L-)
// that already contains HEAD.

namespace curvesing::detail {

extern const char* const kTheoremTables;

const char* const kTheoremTables = R"TABLE(
# C5 smooth
row I | [i] | B_{[5*i],2} | i=1..10
row L-I | [2*i] | B_{[10*i],2} | i=1..5

# m5 = 2, two tangent lines
row II-a-1 | [i] | B_{[5*i-7],2}oB_{2,3} | i=2..10
row II-a-2 | [i1+i2] | B_{[5*i2-2],2}oB_{2,[5*i1-2]} | i1=2..8; i2=2..[10-i1]

# m5 = 2, double tangent line, C2 smooth
row II-b-1 | 2 | B_{5,4}
row II-b-1 | 3 | (B_{3,2}^2)^{B_{3,2}}
row II-b-1 | 4 | (B_{4,2}^2)^{2B_{2,2}}
row II-b-1 | 4 | B_{10,4}
row II-b-1 | 4 | B_{[k],2}oB_{5,2} | k=6..15
row II-b-1 | 5 | (B_{4,2}^2)^{B_{7,2}+B_{2,2}}
row II-b-1 | 5 | (B_{5,2}^2)^{B_{5,2}}
row II-b-1 | [i] | (B_{4,2}^2)^{B_{[5*i-18],2}+B_{2,2}} | i=6..10
row II-b-1 | [i] | (B_{6,2}^2)^{B_{[5*i-27],2}+B_{3,2}} | i=7..10
row II-b-1 | 6 | (B_{6,2}^2)^{2B_{3,2}}
row II-b-1 | [i] | (B_{7,2}^2)^{B_{[5*i-28],2}} | i=6,7
row II-b-1 | 6 | B_{15,4}
row II-b-1 | [i] | (B_{8,2}^2)^{B_{[5*i-36],2}+B_{4,2}} | i=9,10
row II-b-1 | 8 | (B_{8,2}^2)^{2B_{4,2}}
row II-b-1 | [i] | (B_{9,2}^2)^{B_{[5*i-35],2}} | i=8,9
row II-b-1 | 8 | B_{20,4}
row II-b-1 | 8 | B_{[k],2}oB_{10,2} | k=11,12
row II-b-1 | 10 | (B_{10,2}^2)^{2B_{5,2}}
row II-b-1 | 10 | (B_{11,2}^2)^{B_{6,2}}
row II-b-1 | 10 | (B_{12,2}^2)^{2B_{1,2}}
row II-b-1 | 10 | B_{25,4}

# m5 = 2, double tangent line, C2 a line pair
row II-b-2 | 4 | (B_{3,2}^2)^{B_{8,2}}
row II-b-2 | 4 | (B_{4,2}^2)^{2B_{2,2}}
row II-b-2 | 4 | B_{10,4}
row II-b-2 | 4 | B_{[k],2}oB_{5,2} | k=6..15
row II-b-2 | 5 | (B_{3,2}^2)^{B_{13,2}}
row II-b-2 | 6 | (B_{4,2}^2)^{2B_{7,2}}
row II-b-2 | 6 | (B_{5,2}^2)^{B_{10,2}}
row II-b-2 | 6 | (B_{6,2}^2)^{2B_{3,2}}
row II-b-2 | 6 | (B_{7,2}^2)^{B_{2,2}}
row II-b-2 | 6 | B_{15,4}
row II-b-2 | 7 | B_{16,2}o(B_{2,1}^2)^{B_{7,2}}
row II-b-2 | 7 | (B_{5,2}^2)^{B_{15,2}}

# m5 = 3, three tangent lines
row III-a-1 | 3 | B_{6,5}
row III-a-1 | [i] | B_{[5*i-14],2}oB_{4,3} | i=4..10
row III-a-2 | [i1+i2] | B_{[5*i2-9],2}o(B_{1,1}^2)^{B_{4,2}}oB_{2,[5*i1-9]} | i1=3..7; i2=3..[10-i1]

# m5 = 3, double and simple tangent line, C2 smooth
row III-b-1 | 3 | B_{6,5}
row III-b-1 | [i] | B_{3,4}oB_{2,[5*i-14]} | i=4..10
row III-b-1 | [i] | B_{[2*i],5} | i=4,5
row III-b-1 | [i] | B_{[5*i-21],2}oB_{6,3} | i=6..10
row III-b-1 | 5 | B_{[k],2}oB_{6,3} | k=5..12
row III-b-1 | 5 | B_{[k],3}oB_{4,2} | k=7..11
row III-b-1 | 5 | B_{3,1}oB_{5,2}oB_{4,2}
row III-b-1 | 5 | B_{3,1}oB_{7,2}oB_{4,2}
row III-b-1 | 5 | B_{[k],2}oB_{3,1}oB_{4,2} | k=7,8,9
row III-b-1 | 5 | B_{[k2+4],2}oB_{2,1}o(B_{2,1}^2)^{B_{[k1],2}} | k2=5..7; k1=[k2-4]..[13-k2]
row III-b-1 | 5 | B_{12,2}oB_{2,1}o(B_{2,1}^2)^{B_{4,2}}
row III-b-1 | 5 | B_{13,2}oB_{2,1}o(B_{2,1}^2)^{B_{5,2}}
row III-b-1 | 6 | (B_{5,2}^2)^{B_{1,2}}oB_{2,1}
row III-b-1 | 6 | B_{9,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1..8
row III-b-1 | 7 | (B_{6,2}^2)^{2B_{1,2}}oB_{2,1}
row III-b-1 | 7 | B_{13,4}oB_{2,1}
row III-b-1 | 7 | B_{14,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1..7
row III-b-1 | 8 | (B_{6,2}^2)^{B_{6,2}+B_{1,2}}oB_{2,1}
row III-b-1 | 8 | (B_{7,2}^2)^{B_{3,2}}oB_{2,1}
row III-b-1 | 8 | B_{19,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1..6
row III-b-1 | 9 | (B_{6,2}^2)^{B_{11,2}+B_{1,2}}oB_{2,1}
row III-b-1 | 9 | (B_{8,2}^2)^{2B_{2,2}}oB_{2,1}
row III-b-1 | 9 | B_{18,4}oB_{2,1}
row III-b-1 | 9 | B_{11,2}oB_{9,2}oB_{2,1}
row III-b-1 | 9 | B_{24,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1..4
row III-b-1 | 10 | (B_{6,2}^2)^{B_{16,2}+B_{1,2}}oB_{2,1}
row III-b-1 | 10 | (B_{8,2}^2)^{B_{7,2}+B_{2,2}}oB_{2,1}
row III-b-1 | 10 | (B_{9,2}^2)^{B_{5,2}}oB_{2,1}
row III-b-1 | 10 | B_{29,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1,2,3,5

# m5 = 3, double and simple tangent line, C2 a line pair
row III-b-2 | 6 | (B_{3,2}^2)^{B_{4,2}}oB_{2,6}
row III-b-2 | 6 | B_{8,4}oB_{2,6}
row III-b-2 | 6 | B_{[k],2}oB_{4,2}oB_{2,6} | k=5..12
row III-b-2 | 7 | (B_{3,2}^2)^{B_{4,2}}oB_{2,11}
row III-b-2 | 7 | B_{8,4}oB_{2,11}
row III-b-2 | 7 | B_{[k],2}oB_{4,2}oB_{2,11} | k=5..10
row III-b-2 | 7 | (B_{3,2}^2)^{B_{9,2}}oB_{2,6}
row III-b-2 | 8 | (B_{3,2}^2)^{B_{4,2}}oB_{2,16}
row III-b-2 | 8 | (B_{3,2}^2)^{B_{9,2}}oB_{2,11}
row III-b-2 | [i] | (B_{4,2}^2)^{2B_{5,2}}oB_{2,[5*i-34]} | i=8..10
row III-b-2 | [i] | (B_{5,2}^2)^{B_{6,2}}oB_{2,[5*i-34]} | i=8..10
row III-b-2 | [i] | (B_{6,2}^2)^{2B_{1,2}}oB_{2,[5*i-34]} | i=8..10
row III-b-2 | [i] | B_{13,4}oB_{2,[5*i-34]} | i=8..10
row III-b-2 | 9 | (B_{3,2}^2)^{B_{9,2}}oB_{2,16}

# m5 = 3, triple tangent line
row III-c-1 | 3 | B_{6,5}
row III-c-1 | 4 | B_{8,5}
row III-c-1 | 5 | B_{10,5}
row III-c-1 | 5 | B_{[k],2}oB_{6,3} | k=5..12
row III-c-1 | [i] | B_{[5*i-21],2}oB_{6,3} | i=6..10
row III-c-1 | [i] | B_{[2*i],5} | i=6..10
row III-c-1 | [i] | B_{[5*i-28],2}oB_{8,3} | i=7..10
row III-c-1 | [i] | B_{[5*i-35],2}oB_{10,3} | i=9,10
row III-c-2 | 6 | (B_{4,3}^2)^{B_{6,2}}
row III-c-2 | 6 | B_{4,2}o(B_{3,2}^2)^{B_{2,2}}
row III-c-2 | 6 | B_{10,6}
row III-c-2 | 6 | B_{6,3}oB_{5,3}
row III-c-2 | 7 | (B_{4,3}^2)^{B_{11,2}}
row III-c-2 | 8 | B_{9,2}o(B_{3,2}^2)^{B_{7,2}}
row III-c-2 | 8 | (B_{5,3}^2)^{B_{10,2}}

# m5 = 4, four tangent lines
row IV-a-1 | 4 | B_{8,5}
row IV-a-1 | 5 | B_{10,5}
row IV-a-1 | 5 | B_{[k],2}oB_{6,3} | k=5..10
row IV-a-1 | [i] | B_{[5*i-21],2}oB_{6,3} | i=6..10
row IV-a-2 | [i1+i2] | B_{[5*i1-16],2}o(B_{2,2}^2)^{2B_{2,2}}oB_{2,[5*i2-16]} | i1=4..6; i2=4..[10-i1]

# m5 = 4, double line and two simple lines
row IV-b-1 | 4 | B_{8,5}
row IV-b-1 | 5 | B_{5,10}
row IV-b-1 | 5 | B_{3,6}oB_{2,[k]} | k=5..10
row IV-b-1 | [i] | B_{3,6}oB_{2,[5*i-21]} | i=6..10
row IV-b-1 | 6 | B_{12,5}
row IV-b-1 | [i] | B_{[5*i-28],2}oB_{8,3} | i=7..10
row IV-b-2 | 8 | B_{6,4}o(B_{1,1}^2)^{B_{2,2}}oB_{2,4}
row IV-b-2 | 8 | B_{4,2}oB_{3,2}o(B_{1,1}^2)^{B_{2,2}}oB_{2,4}
row IV-b-2 | 9 | (B_{3,2}^2)^{B_{5,2}}o(B_{1,1}^2)^{B_{2,2}}oB_{2,4}
row IV-b-2 | 9 | B_{6,4}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9}
row IV-b-2 | 9 | B_{4,2}oB_{3,2}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9}
row IV-b-2 | 10 | (B_{3,2}^2)^{B_{5,2}}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9}
row IV-b-2 | 10 | B_{6,4}o(B_{1,1}^2)^{B_{7,2}}oB_{2,9}
row IV-b-2 | 10 | B_{4,2}oB_{3,2}o(B_{1,1}^2)^{B_{7,2}}oB_{2,9}

# m5 = 4, triple line and simple line
row IV-c-1 | 4 | B_{8,5}
row IV-c-1 | 5 | B_{5,10}
row IV-c-1 | 5 | B_{3,6}oB_{2,[k]} | k=5..10
row IV-c-1 | [i] | B_{3,6}oB_{2,[5*i-21]} | i=6..10
row IV-c-1 | [i] | B_{[2*i],5} | i=6..8
row IV-c-1 | [i] | B_{[5*i-35],2}oB_{10,3} | i=9,10
row IV-c-2 | 8 | B_{8,6}oB_{2,4}
row IV-c-2 | 8 | B_{5,3}oB_{4,3}oB_{2,4}
row IV-c-2 | 9 | (B_{4,3}^2)^{B_{5,2}}oB_{2,4}
row IV-c-2 | 9 | B_{5,3}oB_{4,3}oB_{2,9}
row IV-c-2 | 9 | B_{8,6}oB_{2,9}
row IV-c-2 | 10 | (B_{4,3}^2)^{B_{5,2}}oB_{2,9}

# m5 = 4, quadruple line
row IV-d-1 | [i] | B_{[2*i],5} | i=4..10
row IV-d-2 | 8 | B_{10,8}
row IV-d-2 | 8 | B_{2,1}oB_{4,3}oB_{5,4}
row IV-d-2 | 9 | (B_{5,4}^2)^{B_{5,2}}

# m5 = 4, two double lines
row IV-e-1 | 4 | B_{8,5}
row IV-e-1 | [i] | B_{[2*i],5} | i=5,6
row IV-e-1 | [i] | B_{[5*i-28],2}oB_{8,3} | i=7..10
row IV-e-1 | [i] | B_{5,[2*i]} | i=5,6
row IV-e-1 | [i] | B_{3,8}oB_{2,[5*i-28]} | i=7..10
row IV-e-2 | 8 | B_{6,4}oB_{4,6}
row IV-e-2 | 8 | B_{4,2}oB_{3,2}oB_{4,6}
row IV-e-2 | 8 | B_{4,2}oB_{3,2}oB_{2,3}oB_{2,4}
row IV-e-2 | 9 | B_{6,4}o(B_{2,3}^2)^{B_{5,2}}
row IV-e-2 | 9 | B_{4,2}oB_{3,2}o(B_{2,3}^2)^{B_{5,2}}
row IV-e-2 | 10 | (B_{3,2}^2)^{B_{5,2}}o(B_{2,3}^2)^{B_{5,2}}

# m5 = 5
row V-1 | [i] | B_{[2*i],5} | i=5..10
row V-2 | 10 | B_{10,10}

# Degenerations, C2 irreducible
dagger smooth | (B_{4,2}^2)^{2B_{2,2}} | B_{10,4}
dagger smooth | (B_{4,2}^2)^{2B_{2,2}} | B_{[k],2}oB_{2,5} | k=6..15
dagger smooth | (B_{4,2}^2)^{B_{7,2}+B_{2,2}} | (B_{5,2}^2)^{B_{5,2}}
dagger smooth | (B_{4,2}^2)^{B_{12,2}+B_{2,2}} | (B_{6,2}^2)^{2B_{3,2}}
dagger smooth | (B_{4,2}^2)^{B_{12,2}+B_{2,2}} | (B_{7,2}^2)^{B_{2,2}}
dagger smooth | (B_{4,2}^2)^{B_{12,2}+B_{2,2}} | B_{15,4}
dagger smooth | (B_{4,2}^2)^{B_{17,2}+B_{2,2}} | (B_{6,2}^2)^{B_{8,2}+B_{3,2}}
dagger smooth | (B_{4,2}^2)^{B_{17,2}+B_{2,2}} | (B_{7,2}^2)^{B_{7,2}}
dagger smooth | (B_{4,2}^2)^{B_{22,2}+B_{2,2}} | (B_{6,2}^2)^{B_{13,2}+B_{3,2}}
dagger smooth | (B_{4,2}^2)^{B_{22,2}+B_{2,2}} | (B_{8,2}^2)^{2B_{4,2}}
dagger smooth | (B_{4,2}^2)^{B_{22,2}+B_{2,2}} | (B_{9,2}^2)^{B_{5,2}}
dagger smooth | (B_{4,2}^2)^{B_{22,2}+B_{2,2}} | B_{20,4}
dagger smooth | (B_{4,2}^2)^{B_{22,2}+B_{2,2}} | B_{[k],2}oB_{10,2} | k=11,12
dagger smooth | (B_{4,2}^2)^{B_{27,2}+B_{2,2}} | (B_{6,2}^2)^{B_{18,2}+B_{3,2}}
dagger smooth | (B_{4,2}^2)^{B_{27,2}+B_{2,2}} | (B_{8,2}^2)^{B_{9,2}+B_{4,2}}
dagger smooth | (B_{4,2}^2)^{B_{27,2}+B_{2,2}} | (B_{9,2}^2)^{B_{10,2}}
dagger smooth | (B_{4,2}^2)^{B_{32,2}+B_{2,2}} | (B_{6,2}^2)^{B_{23,2}+B_{3,2}}
# printed B_{13,2}; the case formula B_{5i-36,2} at i = 10 and the by-iota list give B_{14,2}
dagger smooth | (B_{4,2}^2)^{B_{32,2}+B_{2,2}} | (B_{8,2}^2)^{B_{14,2}+B_{4,2}}
dagger smooth | (B_{4,2}^2)^{B_{32,2}+B_{2,2}} | (B_{10,2}^2)^{2B_{5,2}}
dagger smooth | (B_{4,2}^2)^{B_{32,2}+B_{2,2}} | (B_{11,2}^2)^{B_{6,2}}
dagger smooth | (B_{4,2}^2)^{B_{32,2}+B_{2,2}} | (B_{12,2}^2)^{2B_{1,2}}
dagger smooth | (B_{4,2}^2)^{B_{32,2}+B_{2,2}} | B_{25,4}
dagger smooth | B_{10,5} | B_{[k],2}oB_{6,3} | k=5..12
dagger smooth | B_{10,5} | B_{[k],3}oB_{4,2} | k=7..11
dagger smooth | B_{10,5} | B_{3,1}oB_{5,2}oB_{4,2}
dagger smooth | B_{10,5} | B_{3,1}oB_{7,2}oB_{4,2}
dagger smooth | B_{10,5} | B_{[k],2}oB_{3,1}oB_{4,2} | k=7,8,9
dagger smooth | B_{10,5} | B_{[k2+4],2}oB_{2,1}o(B_{2,1}^2)^{B_{[k1],2}} | k2=5..7; k1=[k2-4]..[13-k2]
dagger smooth | B_{10,5} | B_{12,2}oB_{2,1}o(B_{2,1}^2)^{B_{4,2}}
dagger smooth | B_{10,5} | B_{13,2}oB_{2,1}o(B_{2,1}^2)^{B_{5,2}}
dagger smooth | B_{9,2}oB_{6,3} | (B_{5,2}^2)^{B_{1,2}}oB_{2,1}
dagger smooth | B_{9,2}oB_{6,3} | B_{9,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1..8
dagger smooth | B_{14,2}oB_{6,3} | (B_{5,2}^2)^{B_{1,2}}oB_{2,1}
dagger smooth | B_{14,2}oB_{6,3} | B_{13,2}oB_{2,1}
dagger smooth | B_{14,2}oB_{6,3} | B_{14,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1..7
dagger smooth | B_{19,2}oB_{6,3} | B_{12,2}o(B_{3,1}^2)^{B_{1,2}}oB_{2,1}
dagger smooth | B_{19,2}oB_{6,3} | (B_{7,2}^2)^{B_{4,2}}oB_{2,1}
dagger smooth | B_{19,2}oB_{6,3} | B_{19,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1..6
dagger smooth | B_{24,2}oB_{6,3} | B_{17,2}o(B_{3,1}^2)^{B_{1,2}}oB_{2,1}
dagger smooth | B_{24,2}oB_{6,3} | (B_{8,2}^2)^{2B_{2,2}}oB_{1,2}
dagger smooth | B_{24,2}oB_{6,3} | B_{18,4}oB_{2,1}
dagger smooth | B_{24,2}oB_{6,3} | B_{24,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1..5
dagger smooth | B_{29,2}oB_{6,3} | B_{22,2}o(B_{3,1}^2)^{B_{1,2}}oB_{2,1}
dagger smooth | B_{29,2}oB_{6,3} | B_{22,2}o(B_{4,1}^2)^{B_{2,2}}oB_{2,1}
dagger smooth | B_{29,2}oB_{6,3} | (B_{9,2}^2)^{B_{5,2}}oB_{2,1}
dagger smooth | B_{29,2}oB_{6,3} | B_{29,2}oB_{2,1}o(B_{2,1}^2)^{B_{[k],2}} | k=1,2,3,5

# Degenerations, C2 a line pair
dagger lines | (B_{3,2}^2)^{B_{8,2}} | (B_{4,2}^2)^{2B_{2,2}}
dagger lines | (B_{3,2}^2)^{B_{8,2}} | B_{10,4}
dagger lines | (B_{3,2}^2)^{B_{8,2}} | B_{[k],2}oB_{2,5} | k=6..15
dagger lines | (B_{4,2}^2)^{2B_{7,2}} | (B_{5,2}^2)^{B_{10,2}}
dagger lines | (B_{4,2}^2)^{2B_{7,2}} | (B_{6,2}^2)^{2B_{3,2}}
dagger lines | (B_{4,2}^2)^{2B_{7,2}} | (B_{7,2}^2)^{B_{2,2}}
dagger lines | (B_{4,2}^2)^{2B_{7,2}} | B_{15,4}
dagger lines | B_{16,2}o(B_{2,1}^2)^{B_{7,2}} | (B_{5,2}^2)^{B_{15,2}}
dagger lines | (B_{3,2}^2)^{B_{4,2}}oB_{2,6} | B_{8,4}oB_{2,6}
dagger lines | (B_{3,2}^2)^{B_{4,2}}oB_{2,6} | B_{[k],2}oB_{4,2}oB_{2,6} | k=5..12
dagger lines | (B_{3,2}^2)^{B_{4,2}}oB_{2,11} | B_{8,4}oB_{2,11}
dagger lines | (B_{3,2}^2)^{B_{4,2}}oB_{2,11} | B_{[k],2}oB_{4,2}oB_{2,11} | k=5..10
dagger lines | (B_{4,2}^2)^{2B_{5,2}}oB_{2,[j]} | (B_{5,2}^2)^{B_{6,2}}oB_{2,[j]} | j=6,11,16
dagger lines | (B_{4,2}^2)^{2B_{5,2}}oB_{2,[j]} | (B_{6,2}^2)^{2B_{1,2}}oB_{2,[j]} | j=6,11,16
dagger lines | (B_{4,2}^2)^{2B_{5,2}}oB_{2,[j]} | B_{13,4}oB_{2,[j]} | j=6,11,16
dagger lines | (B_{4,3}^2)^{B_{6,2}} | B_{10,6}
dagger lines | (B_{4,3}^2)^{B_{6,2}} | B_{6,3}oB_{5,3}
dagger lines | B_{6,4}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9} | B_{4,3}oB_{3,2}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9}
dagger lines | B_{6,4}o(B_{1,1}^2)^{B_{7,2}}oB_{2,4} | B_{4,3}oB_{3,2}o(B_{1,1}^2)^{B_{7,2}}oB_{2,4}
dagger lines | B_{6,4}o(B_{1,1}^2)^{B_{7,2}}oB_{2,9} | B_{4,3}oB_{3,2}o(B_{1,1}^2)^{B_{7,2}}oB_{2,9}
dagger lines | B_{8,6}oB_{2,4} | B_{5,4}oB_{4,3}oB_{2,4}
dagger lines | B_{8,6}oB_{2,9} | B_{5,4}oB_{4,3}oB_{2,9}
dagger lines | B_{6,4}oB_{4,6} | B_{4,2}oB_{3,2}oB_{2,6}
dagger lines | B_{6,4}oB_{4,6} | B_{4,2}oB_{3,2}oB_{2,3}oB_{2,4}
dagger lines | B_{6,4}o(B_{2,3}^2)^{B_{5,2}} | B_{4,2}oB_{3,2}o(B_{2,3}^2)^{B_{5,2}}

# Linear curves: f2 = c l^2
row L-II-a | [i] | B_{[5*i-12],2}oB_{2,8} | i=4,6,8,10
row L-II-b | 4 | (B_{3,2}^2)^{B_{8,2}}
row L-II-b | 6 | (B_{3,2}^2)^{B_{18,2}}
row L-II-b | 4 | (B_{4,2}^2)^{2B_{2,2}}
row L-II-b | 8 | (B_{4,2}^2)^{2B_{12,2}}
row L-II-b | 10 | (B_{4,2}^2)^{B_{22,2}+B_{12,2}}
row L-II-b | 4 | B_{10,4}
row L-II-b | 4 | B_{[k],2}oB_{2,5} | k=6..15
row L-II-b | 8 | (B_{5,2}^2)^{B_{20,2}}
row L-II-b | 10 | (B_{5,2}^2)^{B_{30,2}}
row L-II-b | 8 | (B_{6,2}^2)^{2B_{8,2}}
row L-II-b | 8 | (B_{7,2}^2)^{B_{12,2}}
row L-II-b | 8 | (B_{8,2}^2)^{2B_{4,2}}
row L-II-b | 8 | (B_{9,2}^2)^{B_{4,2}}
row L-II-b | 8 | B_{20,5}
row L-II-b | 8 | B_{[k],2}oB_{10,3} | k=11..13
row L-III-a | 6 | (B_{3,3}^2)^{3B_{4,2}}
row L-III-a | 8 | B_{16,2}o(B_{2,2}^2)^{2B_{4,2}}
row L-III-a | 10 | B_{26,2}o(B_{2,2}^2)^{2B_{4,2}}
row L-III-b | 6 | B_{6,2}o(B_{2,3}^2)^{B_{4,2}}
row L-III-b | 6 | B_{8,4}oB_{2,6}
row L-III-b | 6 | B_{[k],2}oB_{4,2}oB_{2,6} | k=5..10
row L-III-b | 8 | (B_{3,2}^2)^{B_{14,2}}oB_{2,6}
row L-III-b | 8 | B_{16,2}o(B_{2,3}^2)^{B_{4,2}}
row L-III-b | 8 | B_{16,2}oB_{4,8}
row L-III-b | 8 | B_{16,2}oB_{2,4}oB_{2,[k]} | k=5..10
row L-III-b | 10 | (B_{4,2}^2)^{2B_{10,2}}oB_{2,6}
row L-III-b | 10 | (B_{5,2}^2)^{B_{16,2}}oB_{2,6}
row L-III-b | 10 | (B_{6,2}^2)^{2B_{6,2}}oB_{2,6}
row L-III-b | 10 | (B_{8,2}^2)^{2B_{2,2}}oB_{2,6}
row L-III-b | 10 | B_{18,2}oB_{2,6}
row L-III-b | 10 | B_{19,2}oB_{2,6}
row L-III-b | 10 | B_{26,2}o(B_{2,3}^2)^{B_{4,2}}
row L-III-b | 10 | B_{26,2}oB_{4,8}
row L-III-b | 10 | B_{26,2}oB_{2,4}oB_{2,[k]} | k=5..9
row L-III-c | 6 | (B_{4,3}^2)^{B_{6,2}}
row L-III-c | 6 | B_{4,2}o(B_{3,2}^2)^{B_{2,2}}
row L-III-c | 6 | B_{10,6}
row L-III-c | 6 | B_{3,6}oB_{5,3}
row L-III-c | 8 | (B_{4,3}^2)^{B_{16,2}}
row L-III-c | 10 | B_{4,2}o(B_{3,2}^2)^{B_{12,2}}
row L-III-c | 10 | (B_{5,3}^2)^{B_{20,2}}
row L-IV-a | 8 | (B_{4,4}^2)^{4B_{2,2}}
row L-IV-a | 10 | B_{14,2}o(B_{3,3}^2)^{3B_{2,2}}
row L-IV-b | 8 | (B_{2,2}^2)^{2B_{2,2}}oB_{4,6}
row L-IV-b | 8 | (B_{2,2}^2)^{2B_{2,2}}oB_{2,3}oB_{2,4}
row L-IV-b | 10 | B_{14,2}o(B_{1,1}^2)^{B_{2,2}}oB_{4,6}
row L-IV-b | 10 | B_{14,2}o(B_{1,1}^2)^{B_{2,2}}oB_{2,3}oB_{2,4}
# cone x y^2 (y+cx): printed (B_{3,2}^2)^{B_{10,2}}o(B_{2,2}^2)^{2B_{2,2}}oB_{2,4}, whose model has mu 103 > 81.
# with f2 = -y^2, f = (f5 - y^5)(f5 + y^5); each factor has two lines and a cusp (mu 10), meeting with I = 25, so mu = 69.
row L-IV-b | 10 | B_{4,2}o(B_{1,1}^2)^{B_{2,2}}o(B_{1,1}^4)^{(B_{1,2}^2)^{B_{10,2}}}
row L-IV-c | 8 | B_{4,2}oB_{6,8}
row L-IV-c | 8 | B_{4,2}oB_{3,4}oB_{2,3}oB_{1,2}
row L-IV-c | 10 | B_{14,2}oB_{6,8}
row L-IV-c | 10 | B_{14,2}oB_{3,4}oB_{2,3}oB_{1,2}
row L-IV-c | 10 | (B_{4,3}^2)^{B_{10,2}}oB_{2,4}
row L-IV-d | 8 | B_{8,10}
row L-IV-d | 8 | B_{4,5}oB_{3,4}oB_{1,2}
row L-IV-d | 10 | (B_{4,5}^2)^{B_{10,2}}
# printed (B_{2,2}^4)^{2B_{10,2}}: superscripts of an e = 4 tower need order 4, so no germ has that name.
# f = (f5 - y^5)(f5 + y^5), each factor two cusps on the double lines (mu 11), I = 20: mu = 61.
row L-IV-e | 8 | (B_{2,2}^4)^{2B_{2,4}}
# printed (B_{1,1}^4)^{B_{10,2}}oB_{4,6} and (B_{1,1}^4)^{B_{10,2}}oB_{2,3}oB_{2,4}: same order-4 superscript problem.
row L-IV-e | 8 | (B_{1,1}^4)^{B_{2,4}}oB_{4,6}
row L-IV-e | 8 | (B_{1,1}^4)^{B_{2,4}}oB_{2,3}oB_{2,4}
row L-IV-e | 10 | (B_{3,2}^2)^{B_{10,2}}oB_{4,6}
row L-IV-e | 10 | (B_{3,2}^2)^{B_{10,2}}oB_{2,3}oB_{2,4}
row L-V | 10 | B_{10,10}

dagger linear | (B_{3,2}^2)^{B_{8,2}} | B_{10,4}
dagger linear | (B_{3,2}^2)^{B_{8,2}} | (B_{4,2}^2)^{2B_{2,2}}
dagger linear | (B_{3,2}^2)^{B_{8,2}} | B_{[k],2}oB_{5,2} | k=6..15
dagger linear | (B_{3,2}^2)^{B_{18,2}} | (B_{5,2}^2)^{B_{20,2}}
dagger linear | (B_{3,2}^2)^{B_{18,2}} | (B_{6,2}^2)^{2B_{8,2}}
dagger linear | (B_{3,2}^2)^{B_{18,2}} | (B_{7,2}^2)^{B_{12,2}}
dagger linear | (B_{3,2}^2)^{B_{18,2}} | (B_{8,2}^2)^{2B_{4,2}}
dagger linear | (B_{3,2}^2)^{B_{18,2}} | (B_{9,2}^2)^{B_{4,2}}
dagger linear | (B_{3,2}^2)^{B_{18,2}} | B_{20,5}
dagger linear | (B_{3,2}^2)^{B_{18,2}} | B_{[k],2}oB_{10,3} | k=1..13
dagger linear | (B_{4,2}^2)^{B_{22,2}+B_{12,2}} | (B_{5,2}^2)^{B_{30,2}}
dagger linear | B_{6,2}o(B_{2,3}^2)^{B_{4,2}} | B_{8,4}oB_{2,6}
dagger linear | B_{6,2}o(B_{2,3}^2)^{B_{4,2}} | B_{[k],2}oB_{4,2}oB_{2,6} | k=5..10
dagger linear | B_{16,2}o(B_{2,3}^2)^{B_{4,2}} | B_{16,2}oB_{4,8}
dagger linear | B_{16,2}o(B_{2,3}^2)^{B_{4,2}} | B_{16,2}oB_{2,4}oB_{2,[k]} | k=5..10
dagger linear | B_{26,2}o(B_{2,3}^2)^{B_{4,2}} | B_{26,2}oB_{4,8}
dagger linear | B_{26,2}o(B_{2,3}^2)^{B_{4,2}} | B_{26,2}oB_{2,4}oB_{2,[k]} | k=5..9
dagger linear | (B_{4,2}^2)^{2B_{10,2}}oB_{2,6} | (B_{5,2}^2)^{B_{16,2}}oB_{2,6}
dagger linear | (B_{4,2}^2)^{2B_{10,2}}oB_{2,6} | (B_{6,2}^2)^{2B_{6,2}}oB_{2,6}
dagger linear | (B_{4,2}^2)^{2B_{10,2}}oB_{2,6} | (B_{8,2}^2)^{2B_{2,2}}oB_{2,6}
dagger linear | (B_{4,2}^2)^{2B_{10,2}}oB_{2,6} | B_{18,2}oB_{2,6}
dagger linear | (B_{4,2}^2)^{2B_{10,2}}oB_{2,6} | B_{19,2}oB_{2,6}
dagger linear | (B_{4,3}^2)^{B_{6,2}} | B_{4,2}o(B_{3,2}^2)^{B_{2,2}}
dagger linear | (B_{4,3}^2)^{B_{6,2}} | B_{10,6}
dagger linear | (B_{4,3}^2)^{B_{6,2}} | B_{6,3}oB_{5,3}
dagger linear | B_{4,2}o(B_{3,2}^2)^{B_{12,2}} | (B_{5,3}^2)^{B_{20,2}}
dagger linear | (B_{2,2}^2)^{2B_{2,2}}oB_{4,6} | B_{2,4}oB_{2,3}o(B_{2,2}^2)^{2B_{2,2}}oB_{2,3}oB_{2,4}
dagger linear | B_{14,2}o(B_{1,1}^2)^{B_{2,2}}oB_{4,6} | B_{14,2}o(B_{1,1}^2)^{B_{2,2}}oB_{2,3}oB_{2,4}
dagger linear | B_{4,2}oB_{6,8} | B_{4,2}oB_{3,4}oB_{2,3}oB_{1,2}
dagger linear | B_{14,2}oB_{6,8} | B_{14,2}oB_{3,4}oB_{2,3}oB_{1,2}
dagger linear | B_{8,10} | B_{4,5}oB_{3,4}oB_{1,2}
dagger linear | (B_{2,2}^4)^{2B_{10,2}} | (B_{1,1}^4)^{B_{10,2}}oB_{4,6}
dagger linear | (B_{2,2}^4)^{2B_{10,2}} | (B_{1,1}^4)^{B_{10,2}}oB_{2,3}oB_{2,4}
dagger linear | (B_{3,2}^2)^{B_{10,2}}oB_{4,6} | (B_{3,2}^2)^{B_{10,2}}oB_{2,3}oB_{2,4}
)TABLE";

}  // namespace curvesing::detail
