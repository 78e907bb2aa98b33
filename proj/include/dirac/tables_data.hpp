#pragma once

// Embedded copies of the shipped datasets (see data/); the loader falls
// back to these when no dataset directory override is given.

namespace dirac {
namespace embedded {

inline constexpr const char* kScatteredA6 = R"TSV(group	srho	lambda2	spin_lkt	mult	star	note
A6	3,-5,3,3,-5,3	1,1,1,1,1,1	1,1,1,1,1,1	1	0	
A6	-3,1,4,-6,5,-2	1,1,1,1,1,2	1,1,1,2,0,1	1	1	
A6	-2,-1,5,-6,5,-2	2,2,1,1,1,2	1,0,0,4,0,1	1	1	
A6	-4,2,-1,4,-6,4	1,1,2,1,1,1	2,1,0,1,2,1	1	1	
A6	-2,-1,-1,5,-6,4	2,1,1,1,1,1	1,1,0,2,1,1	1	1	
A6	-2,-1,-1,5,-6,4	2,2,2,1,1,1	1,0,0,0,4,1	1	1	
A6	-5,3,-1,-1,3,-5	1,1,1,1,1,1	1,1,1,1,1,1	1	0	
A6	-5,3,-1,-1,3,-5	1,1,2,2,1,1	3,1,0,0,1,3	1	0	
A6	-3,1,-3,1,3,-5	1,1,1,1,1,1	1,1,1,1,1,1	1	1	
A6	-2,3,-5,3,-4,2	2,1,1,1,1,1	1,1,0,2,1,1	1	1	
A6	-2,-2,1,-2,4,-5	2,1,1,2,1,1	2,1,0,0,2,2	1	1	
A6	-2,-2,1,-2,4,-5	2,2,1,1,1,1	1,1,0,0,3,1	1	1	
A6	-2,-1,-1,-1,4,-5	2,2,2,2,1,1	1,0,0,0,0,5	1	1	
A6	-2,-2,3,-4,2,-3	2,2,1,1,1,1	1,1,0,0,3,1	1	1	
A6	-1,-3,1,1,-3,-1	2,1,1,1,1,2	1,2,0,0,2,1	1	0	
A6	-1,-2,-1,2,-3,-1	2,2,2,1,1,2	2,0,0,0,0,4	1	1	
A6	-1,-1,-1,-1,-1,-1	2,1,1,1,1,2	1,2,0,0,2,1	1	0	
A6	-1,-1,-1,-1,-1,-1	2,2,1,1,2,2	3,0,0,0,0,3	1	0	
A6	-1,-1,-1,-1,-1,-1	1,1,1,1,1,1	1,1,1,1,1,1	1	0	
A6	-1,-1,-1,-1,-1,-1	2,2,2,2,2,2	0,0,0,0,0,0	1	0	
)TSV";

inline constexpr const char* kScatteredD6 = R"TSV(group	srho	lambda2	spin_lkt	mult	star	note
D6	-3,1,5,-7,5,5	1,1,1,1,1,1	1,1,1,1,1,1	1	0	
D6	-2,-1,6,-7,5,5	2,2,1,1,1,1	1,0,0,3,1,1	1	0	
D6	-2,7,-8,6,-1,-1	2,1,1,1,2,2	1,0,4,1,0,0	1	0	
D6	4,-6,5,4,-6,-2	1,1,1,1,1,2	1,2,0,1,2,1	1	1	
D6	7,-9,7,-3,1,1	1,1,1,1,1,1	1,1,1,1,1,1	1	0	
D6	-5,4,-2,7,-8,-2	1,1,2,1,1,2	3,0,1,0,4,1	1	1	
D6	5,-7,5,-7,5,5	1,1,1,1,1,1	1,1,1,1,1,1	1	0	
D6	7,-9,7,-1,-1,-1	1,1,1,2,2,2	1,5,1,0,0,0	1	0	
D6	-1,-3,1,7,-9,-1	2,1,1,1,1,2	2,0,1,0,3,2	1	1	
D6	-6,4,5,-6,-2,4	1,1,1,1,2,1	2,0,2,0,2,1	1	1	
D6	-1,-2,-1,8,-9,-1	2,2,2,1,1,2	0,1,0,0,7,0	1	1	
D6	-9,7,-5,3,-1,-1	1,1,1,1,2,2	1,3,1,1,0,0	1	0	
D6	-2,-1,6,-8,-1,7	2,2,1,1,2,1	0,2,0,0,5,0	1	1	
D6	-7,5,-7,5,-1,-1	1,1,1,1,2,2	1,3,1,1,0,0	1	0	
D6	-9,7,-1,-3,1,1	1,1,2,1,1,1	2,1,2,1,0,0	1	0	
D6	-1,-7,5,-3,1,1	2,1,1,1,1,1	1,1,1,2,0,0	1	0	
D6	-9,7,-1,-1,-1,-1	1,1,2,2,2,2	7,1,0,0,0,0	1	0	
D6	-1,-5,3,-5,3,3	2,1,1,1,1,1	1,1,1,2,0,0	1	0	
D6	-2,4,-5,4,-6,-2	2,1,1,1,1,2	0,2,0,1,0,3	1	1	
D6	-1,-7,5,-1,-1,-1	2,1,1,2,2,2	5,2,0,0,0,0	1	0	
D6	-1,-1,-5,3,-1,-1	2,2,1,1,2,2	3,3,0,0,0,0	1	0	
D6	1,-3,1,-3,-1,1	1,1,1,1,2,1	0,2,0,2,0,1	1	1	
D6	-1,-1,-1,-3,1,1	1,1,1,1,1,1	1,1,1,1,1,1	1	0	
D6	-1,-1,-1,-3,1,1	2,2,2,1,1,1	1,4,0,0,0,0	1	0	
D6	-1,-1,-1,-1,-1,-1	2,1,1,1,1,1	1,1,1,2,0,0	1	0	
D6	-1,-1,-1,-1,-1,-1	2,2,2,2,2,2	0,0,0,0,0,0	1	0	
)TSV";

inline constexpr const char* kScatteredE7 = R"TSV(group	srho	lambda2	spin_lkt	mult	star	note
E7	-2,6,7,-8,6,1,-3	2,1,1,1,1,1,1	1,1,0,2,1,1,1	1	0	E_6, 1st, g=-1
E7	-2,6,7,-8,7,-1,-2	2,1,1,1,1,2,2	1,1,0,4,0,0,1	1	0	A_2.A_1.A_3, d=-1
E7	6,-2,-8,6,5,-6,4	1,2,1,1,1,1,1	1,1,2,1,0,2,1	1	0	D_5 2nd.A_1, f=-1
E7	-5,-7,3,5,5,-7,5	1,1,1,1,1,1,1	1,1,1,1,1,1,1	1	0	A_6, 4th, b=-1
E7	-4,-2,3,7,-9,8,-2	1,2,1,1,1,1,2	2,1,0,1,3,0,1	1	0	D_6, 3rd*, a=-1
E7	-2,-8,-2,7,6,-7,5	2,1,2,1,1,1,1	1,4,1,0,0,3,1	1	0	A_6, 6th, b=-1
E7	-1,-1,-2,9,-10,9,-2	2,2,2,1,1,1,2	0,0,1,0,6,0,1	1	0	A_4.A_2, e=-1
E7	8,-2,-10,9,-2,4,-5	1,2,1,1,2,1,1	1,1,4,0,1,0,3	1	0	E_6, 4th*, g=-1
E7	-6,-9,4,8,-2,4,-6	1,1,1,1,2,1,1	2,3,1,0,1,1,2	1	0	A_6, 8th, b=-1
E7	-8,-1,6,-1,8,-10,8	1,2,1,2,1,1,1	4,0,1,0,1,4,1	1	0	D_6, 8th, a=-1
E7	-2,5,4,-6,10,-12,10	2,1,1,1,1,1,1	1,0,1,1,2,1,1	1	0	E_6, 4th, g=-1
E7	9,-1,-11,9,1,-3,-1	1,2,1,1,1,1,2	1,2,3,0,1,0,2	1	0	E_6, 4th*, g=-3
E7	-6,-10,5,8,1,-3,-2	1,1,1,1,1,1,2	1,2,2,0,1,1,1	1	0	E_6, 5th*, g=-1
E7	-11,5,9,-7,5,5,-7	1,1,1,1,1,1,1	1,1,1,1,1,1,1	1	0	E_6, 7th, g=-1
E7	9,-1,-11,10,-1,-2,-1	1,2,1,1,2,2,2	1,0,7,0,0,1,0	1	0	A_1.A_5, c=-1
E7	-1,-1,-6,4,9,-11,9	2,2,1,1,1,1,1	2,0,2,0,1,3,1	1	0	D_6, 8th, a=-3
E7	-2,-12,-1,10,-1,5,-6	2,1,2,1,2,1,1	1,6,0,1,0,0,4	1	0	E_6, 8th, g=-1
E7	-6,-10,5,9,-1,-2,-2	1,1,1,1,2,2,2	4,6,0,0,0,1,1	1	0	A_6, 13th*, b=-1
E7	-9,7,7,-9,7,5,-7	1,1,1,1,1,1,1	1,1,1,1,1,1,1	1	0	E_6, 9th, g=-1
E7	-2,9,8,-10,8,-10,8	2,1,1,1,1,1,1	1,0,1,1,2,1,1	1	0	A_4.A_2, e=-3
E7	-10,-1,8,4,-6,8,-10	1,2,1,1,1,1,1	2,0,1,1,1,2,1	1	0	E_6, 6th, g=-3
E7	-1,-13,-2,11,3,-4,-1	2,1,2,1,1,1,2	2,5,0,1,0,0,3	1	0	E_6, 8th, g=-3
E7	-10,-1,8,6,-8,6,-8	1,2,1,1,1,1,1	2,0,1,1,1,2,1	1	0	D_6, 14th, g=-1
E7	-2,-1,9,-11,9,6,-7	2,2,1,1,1,1,1	1,3,0,2,0,0,3	1	0	E_6, 11th, g=-1
E7	-12,8,11,-9,7,-2,-2	1,1,1,1,1,2,2	1,0,4,0,1,1,1	1	0	D_6, 11th, a=-3
E7	1,-3,-3,1,11,-13,11	1,1,1,1,1,1,1	1,1,1,1,1,1,1	1	0	E_6, 4th, g=-3
E7	-10,10,9,-11,9,-2,-2	1,1,1,1,1,2,2	1,0,4,0,1,1,1	1	0	A1.A5, c=-3
E7	-1,-2,-1,-1,12,-13,11	2,2,2,2,1,1,1	0,1,0,0,0,9,1	1	0	D_5.A_1, f=-1
E7	-1,-14,-1,13,-2,-1,-1	2,1,2,1,2,2,2	0,10,0,0,1,0,0	1	0	A_6, b=-1
E7	-12,-2,11,-1,-1,8,-10	1,2,1,2,2,1,1	8,1,0,0,0,1,6	1	0	D_6, 17th, a=-1
E7	-14,-7,12,5,-6,4,-2	1,1,1,1,1,1,2	1,0,2,1,1,1,1	1	0	D_6, 19th*, a=-1
E7	-1,-2,12,-13,12,-2,-1	2,2,1,1,1,2,2	0,7,0,0,2,0,0	1	0	A_6, b=-3
E7	-1,-1,-11,9,-1,9,-11	2,2,1,1,2,1,1	6,2,0,0,0,1,5	1	0	D_6, 17th, a=-3
E7	-1,-2,-1,9,-11,13,-14	2,2,2,1,1,1,1	0,1,0,1,0,6,1	1	0	E_6, 13th, g=-3
E7	-13,-2,12,-1,6,-8,-1	1,2,1,2,1,1,2	7,1,0,0,0,2,4	1	0	D_6, 20th, a=-1
E7	-1,-2,-1,11,-13,11,-12	2,2,2,1,1,1,1	0,1,0,1,0,6,1	1	0	D_5.A_1, f=-3
E7	-1,-1,-12,10,7,-9,-1	2,2,1,1,1,1,2	5,2,0,0,0,2,3	1	0	D_6, 20th, a=-3
E7	-14,-2,13,4,-6,-1,-1	1,2,1,1,1,2,2	6,1,0,0,0,3,2	1	0	D_6, 21st, a=-1
E7	-2,8,-1,-9,7,10,-12	2,1,2,1,1,1,1	4,3,0,0,0,1,4	1	0	D_6, 17th, a=-5
E7	-1,7,7,-9,-1,13,-15	2,1,1,1,2,1,1	0,2,0,1,0,4,2	1	0	E_6, 13th, g=-5
E7	-17,1,15,-3,1,-3,1	1,1,1,1,1,1,1	1,1,1,1,1,1,1	1	0	D_6, 22nd, a=-1
E7	11,-2,-12,11,-13,11,-2	1,2,1,1,1,1,2	0,4,1,0,2,0,1	1	0	A_6, b=-5
E7	-1,8,7,-9,11,-13,-2	2,1,1,1,1,1,2	0,1,0,2,0,3,1	1	0	E_6, 15th*, g=-5
E7	-1,10,9,-11,9,-11,-2	2,1,1,1,1,1,2	0,1,0,2,0,3,1	1	0	D_5.A_1, f=-5
E7	-17,-1,15,-1,-1,-1,-1	1,2,1,2,2,2,2	13,0,1,0,0,0,0	1	0	D_6, a=-1
E7	4,-6,-6,4,-1,14,-16	1,1,1,1,2,1,1	1,2,0,1,0,3,2	1	0	E_6, 13th, g=-7
E7	-1,-1,-16,14,-1,-1,-1	2,2,1,1,2,2,2	10,0,2,0,0,0,0	1	0	D_6, a=-3
E7	4,-7,-6,5,12,-14,-2	1,1,1,1,1,1,2	1,1,0,2,0,2,1	1	0	E_6, 15th*, g=-7
E7	-11,9,9,-11,9,-11,9	1,1,1,1,1,1,1	1,1,1,1,1,1,1	1	0	A_6, b=-7
E7	-3,-1,1,-3,1,15,-17	1,2,1,1,1,1,1	2,2,0,1,0,2,2	1	0	E_6, 13th, g=-9
E7	-1,13,-1,-15,13,-1,-1	2,1,2,1,1,2,2	7,0,3,0,0,0,0	1	0	D_6, a=-5
E7	-2,-1,-1,-1,-1,16,-17	2,2,2,2,2,1,1	1,0,0,0,0,0,15	1	0	E_6, g=-1
E7	-1,-1,-2,-1,15,-16,-1	2,2,2,2,1,1,2	2,0,0,0,0,0,13	1	0	E_6, g=-3
E7	-1,-13,-1,11,-13,11,-1	2,1,2,1,1,1,2	5,0,3,0,0,1,0	1	0	D_6, a=-7
E7	-1,-1,-1,13,-15,-1,-1	2,2,2,1,1,2,2	3,0,0,0,0,0,11	1	0	E_6, g=-5
E7	-1,-1,9,-11,9,-11,9	2,2,1,1,1,1,1	3,0,3,0,0,2,0	1	0	D_6, a=-9
E7	-1,11,12,-13,-1,-2,-1	2,1,1,1,2,2,2	4,0,0,0,0,0,9	1	0	E_6, g=-7
E7	10,-10,-11,9,-1,-2,-2	1,1,1,1,2,2,2	4,0,0,0,0,1,7	1	0	E_6, g=-9
E7	6,-1,-8,6,-8,6,-8	1,2,1,1,1,1,1	2,0,2,1,0,2,0	1	0	D_6, a=-11
E7	-9,-1,7,-8,6,-1,-2	1,2,1,1,1,2,2	4,0,0,0,0,2,5	1	0	E_6, g=-11
E7	-1,-2,-6,4,-5,4,-2	2,2,1,1,1,1,2	4,0,0,0,0,3,3	1	0	E_6, g=-13
E7	-5,3,3,-5,3,-5,-1	1,1,1,1,1,1,2	1,0,1,2,0,2,0	1	0	D_6, a=-13
E7	-1,1,-1,-3,1,-3,1	1,1,1,1,1,1,1	1,1,1,1,1,1,1	1	0	
E7	-1,1,-1,-3,1,-3,1	2,1,2,1,1,1,1	4,0,0,0,0,4,1	1	0	E_6, g=-15
E7	-1,-1,-1,-1,-1,-1,-1	1,1,1,1,1,1,2	1,0,1,2,0,2,0	1	0	
E7	-1,-1,-1,-1,-1,-1,-1	2,2,2,2,2,2,2	0,0,0,0,0,0,0	1	0	
)TSV";

}  // namespace embedded
}  // namespace dirac
