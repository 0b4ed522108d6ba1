"""Frozen reference values; regenerate with tests/generate_oracles.py."""

# fmt: off
PREFACTOR_1_5 = 0.2992067103010745
I1_COS_A1_5_K1_X0 = -4.74086224419979
I1_COS_A1_K3_X0_5 = 6.765821007606723
I2_COS_A1_5_K1_X0_4 = 0.7308337105622005
I2_SIN_A0_5_K2_X0_25 = -0.3647026523103111
CONFINED_COS_A1_K1_X0 = -1.3707621681544884
CONFINED_SIN_A0_5_K2_X0_3 = -1.3936552811503977
CONFINED_CONST_A1_3_X0_4 = -0.6588424817729915
OUTSIDE_COS_A1_K1_X1_2 = 0.5138354438143519
OUTSIDE_COS_A1_K1_X100 = 4.053077681554068e-05
HYP1F2 = [(0.25, 1.5, 1.75, -100.0, 0.3201621407627414), (0.5, 1.5, 1.25, -5.0, 0.29403598238151846), (0.9, 1.5, 1.1, 3.0, 3.8040012646347328), (0.0625, 1.5, 1.0625, -350.0, 0.6711362165768686)]
UPPER_GAMMA = [(-1.5, 0.3j, (-3.487197083956306-0.660720928905137j)), (-1.5, (-0-2.5j), (0.06285400618579626-0.033777392628887314j)), (-1.5, 6j, (-0.010053044379041762+0.001482532387627235j)), (-1.5, (-0-15j), (0.001117600983435677-9.339050071643548e-05j)), (-1.5, (1.5+0.5j), (0.013160339355029553-0.02882533451517878j)), (-1.5, (-3+4j), (-0.3664895778954102-0.154880940366808j)), (-1.0, 0.3j, (-1.6342402885089604-1.9121626807641667j)), (-1.0, (-0-2.5j), (0.0464823387238009-0.11273359956984347j)), (-1.0, 6j, (-0.021487994193426146-0.013919605594004254j)), (-1.0, (-0-15j), (0.002926154997219315-0.003247743943782632j)), (-1.0, (1.5+0.5j), (0.024391227641301614-0.03820897756117706j)), (-1.0, (-3+4j), (-0.14651216777635812-0.8763148089687735j)), (-0.25, 0.3j, (0.3296948902295604-1.5842765652893227j)), (-0.25, (-0-2.5j), (-0.15637925078850987-0.22162863228825772j)), (-0.25, 6j, (0.008066401739987919-0.10155688040192004j)), (-0.25, (-0-15j), (-0.0129834353067648-0.030975929987069835j)), (-0.25, (1.5+0.5j), (0.05538855802660544-0.05721221329131159j)), (-0.25, (-3+4j), (2.8378483699202603-0.6676251489953599j)), (0.5, 0.3j, (0.9278364289212335-0.6906911506923713j)), (0.5, (-0-2.5j), (-0.5969141790423885+0.009214957317429537j)), (0.5, 6j, (0.366674225014095-0.16558528145129692j)), (0.5, (-0-15j), (-0.25725276205660425-0.011462832907545075j)), (0.5, (1.5+0.5j), (0.1188237821393633-0.08385389644331026j)), (0.5, (-3+4j), (2.723629805633401+8.949374200950036j))]
MITTAG_LEFFLER = [(0.5, 1.0, -2.0, 0.25539567631050575), (1.5, 0.75, -10.0, -0.04682702547571159), (1.5, 1.75, -4.0, 0.20815575735980998), (1.9, 1.0, 3.0, 3.2164788191246094), (1.0, 1.0, -5.0, 0.006737946999085467)]
RIEMANN_ODD_A1_5_X0_7 = 0.7223920516622517
CAPUTO_EVEN_A1_5_ZERO1 = 1.6452288706517797
APPROX_ENERGY_K1_A1 = 1.3707621681544884
WELL_ENERGIES_N20 = {'0.5': [0.9672627937075637, 1.596657576976053, 2.0222823111016663, 2.3795254159196872, 2.685752453277487, 2.9631613550045244], '1.0': [1.148232206403502, 2.733344077360313, 4.28317407170654, 5.848955079938038, 7.40567441848168, 8.971053790373931], '1.5': [1.5867636492813084, 5.029110523136223, 9.536923608715208, 14.939224008919417, 21.08084022887113, 27.910181802822645], '1.9': [2.243204997312198, 8.593324382190573, 18.711198719390215, 32.45575089161086, 49.71083565504623, 70.4110381015885]}
