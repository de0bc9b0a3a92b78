// GUE Tracy-Widom distribution function on [-6.00, 4.00], step 0.05.
// Generated by tools/tw_table_gen (Airy-kernel Fredholm determinant,
// 120-point Nystrom rule); do not edit by hand.
#ifndef POLYMERLAB_TW_TABLE_DATA_HPP
#define POLYMERLAB_TW_TABLE_DATA_HPP

namespace polymerlab::fluctuations::detail {

inline constexpr int kTWTableVersion = 1;
inline constexpr int kTWTableSize = 201;

inline constexpr double kTWTableX[] = {
    -6,
    -5.9500000000000002,
    -5.9000000000000004,
    -5.8499999999999996,
    -5.7999999999999998,
    -5.75,
    -5.7000000000000002,
    -5.6500000000000004,
    -5.5999999999999996,
    -5.5499999999999998,
    -5.5,
    -5.4500000000000002,
    -5.4000000000000004,
    -5.3499999999999996,
    -5.2999999999999998,
    -5.25,
    -5.2000000000000002,
    -5.1500000000000004,
    -5.0999999999999996,
    -5.0499999999999998,
    -5,
    -4.9500000000000002,
    -4.9000000000000004,
    -4.8499999999999996,
    -4.7999999999999998,
    -4.75,
    -4.7000000000000002,
    -4.6500000000000004,
    -4.5999999999999996,
    -4.5499999999999998,
    -4.5,
    -4.4500000000000002,
    -4.4000000000000004,
    -4.3499999999999996,
    -4.2999999999999998,
    -4.25,
    -4.2000000000000002,
    -4.1500000000000004,
    -4.0999999999999996,
    -4.0499999999999998,
    -4,
    -3.9499999999999997,
    -3.8999999999999999,
    -3.8500000000000001,
    -3.7999999999999998,
    -3.75,
    -3.6999999999999997,
    -3.6499999999999999,
    -3.5999999999999996,
    -3.5499999999999998,
    -3.5,
    -3.4499999999999997,
    -3.3999999999999999,
    -3.3499999999999996,
    -3.2999999999999998,
    -3.25,
    -3.1999999999999997,
    -3.1499999999999999,
    -3.0999999999999996,
    -3.0499999999999998,
    -3,
    -2.9499999999999997,
    -2.8999999999999999,
    -2.8499999999999996,
    -2.7999999999999998,
    -2.75,
    -2.6999999999999997,
    -2.6499999999999999,
    -2.5999999999999996,
    -2.5499999999999998,
    -2.5,
    -2.4499999999999997,
    -2.3999999999999999,
    -2.3499999999999996,
    -2.2999999999999998,
    -2.25,
    -2.1999999999999997,
    -2.1499999999999999,
    -2.0999999999999996,
    -2.0499999999999998,
    -2,
    -1.9500000000000002,
    -1.8999999999999995,
    -1.8499999999999996,
    -1.7999999999999998,
    -1.75,
    -1.7000000000000002,
    -1.6499999999999995,
    -1.5999999999999996,
    -1.5499999999999998,
    -1.5,
    -1.4500000000000002,
    -1.3999999999999995,
    -1.3499999999999996,
    -1.2999999999999998,
    -1.25,
    -1.1999999999999993,
    -1.1499999999999995,
    -1.0999999999999996,
    -1.0499999999999998,
    -1,
    -0.94999999999999929,
    -0.89999999999999947,
    -0.84999999999999964,
    -0.79999999999999982,
    -0.75,
    -0.69999999999999929,
    -0.64999999999999947,
    -0.59999999999999964,
    -0.54999999999999982,
    -0.5,
    -0.44999999999999929,
    -0.39999999999999947,
    -0.34999999999999964,
    -0.29999999999999982,
    -0.25,
    -0.19999999999999929,
    -0.14999999999999947,
    -0.099999999999999645,
    -0.049999999999999822,
    0,
    0.050000000000000711,
    0.10000000000000053,
    0.15000000000000036,
    0.20000000000000018,
    0.25,
    0.30000000000000071,
    0.35000000000000053,
    0.40000000000000036,
    0.45000000000000018,
    0.5,
    0.55000000000000071,
    0.60000000000000053,
    0.65000000000000036,
    0.70000000000000018,
    0.75,
    0.80000000000000071,
    0.85000000000000053,
    0.90000000000000036,
    0.95000000000000018,
    1,
    1.0500000000000007,
    1.1000000000000005,
    1.1500000000000004,
    1.2000000000000002,
    1.25,
    1.3000000000000007,
    1.3500000000000005,
    1.4000000000000004,
    1.4500000000000002,
    1.5,
    1.5500000000000007,
    1.6000000000000005,
    1.6500000000000004,
    1.7000000000000002,
    1.75,
    1.8000000000000007,
    1.8500000000000005,
    1.9000000000000004,
    1.9500000000000002,
    2,
    2.0500000000000007,
    2.0999999999999996,
    2.1500000000000004,
    2.2000000000000011,
    2.25,
    2.3000000000000007,
    2.3499999999999996,
    2.4000000000000004,
    2.4500000000000011,
    2.5,
    2.5500000000000007,
    2.5999999999999996,
    2.6500000000000004,
    2.7000000000000011,
    2.75,
    2.8000000000000007,
    2.8499999999999996,
    2.9000000000000004,
    2.9500000000000011,
    3,
    3.0500000000000007,
    3.0999999999999996,
    3.1500000000000004,
    3.2000000000000011,
    3.25,
    3.3000000000000007,
    3.3499999999999996,
    3.4000000000000004,
    3.4500000000000011,
    3.5,
    3.5500000000000007,
    3.6000000000000014,
    3.6500000000000004,
    3.7000000000000011,
    3.75,
    3.8000000000000007,
    3.8500000000000014,
    3.9000000000000004,
    3.9500000000000011,
    4,
};

inline constexpr double kTWTableF[] = {
    1.062254674064924e-08,
    1.6614753786635277e-08,
    2.5794851307200545e-08,
    3.9753303135255041e-08,
    6.0819339526124704e-08,
    9.2377389043811021e-08,
    1.3930682372804399e-07,
    2.0858786633800527e-07,
    3.1012934441131035e-07,
    4.5788991055394734e-07,
    6.7138387898172485e-07,
    9.7768645010797166e-07,
    1.4140812688612988e-06,
    2.0315263745947693e-06,
    2.899152907738061e-06,
    4.110054507733717e-06,
    5.788673972540541e-06,
    8.1001469139021663e-06,
    1.1262018874178933e-05,
    1.5558811199643756e-05,
    2.1359969847441421e-05,
    2.9141787546436716e-05,
    3.951393997423007e-05,
    5.3251316805454627e-05,
    7.1331853944104921e-05,
    9.4981078721497126e-05,
    0.00012572405967951246,
    0.00016544540088178885,
    0.00021645783173387441,
    0.00028157981162174839,
    0.00036422238967858311,
    0.00046848533025828175,
    0.00059926223238077297,
    0.00076235403689853601,
    0.00096458993106913354,
    0.0012139542322993843,
    0.0015197173695973487,
    0.0018925685946307544,
    0.0023447475591594296,
    0.002890171409849315,
    0.0035445535955092281,
    0.0043255101778003112,
    0.0052526491079020188,
    0.0063476377018359389,
    0.0076342434387665515,
    0.0091383432398735361,
    0.010887896577339984,
    0.012912878126101122,
    0.015245166212006785,
    0.017918384029493976,
    0.020967691492765908,
    0.024429526632874128,
    0.028341296636983409,
    0.032741019916902758,
    0.037666921956236048,
    0.043156989078724749,
    0.04924848566004552,
    0.05597744162453587,
    0.06337811827998667,
    0.071482461601683325,
    0.080319552939333627,
    0.089915067750058392,
    0.10029075332730354,
    0.111463936577859,
    0.12344707268456435,
    0.13624734497924537,
    0.14986632554659629,
    0.16429970500428817,
    0.17953709858483549,
    0.19556193411776526,
    0.2123514258195893,
    0.22987663599315775,
    0.24810262486967516,
    0.26698868695023298,
    0.28648867037270886,
    0.30655137409592115,
    0.32712101610309086,
    0.34813776442268624,
    0.36953832158117456,
    0.3912565521658713,
    0.41322414250512196,
    0.43537128107702971,
    0.45762734813740552,
    0.47992160320530686,
    0.50218385944499089,
    0.52434513461476562,
    0.54633826908859284,
    0.56809850246355642,
    0.58956400141087162,
    0.61067633267329591,
    0.63138087642072604,
    0.65162717651224045,
    0.67136922554234479,
    0.69056568384010264,
    0.70918003281384467,
    0.7271806641670735,
    0.74454090753316837,
    0.76123899997233679,
    0.77725800153321822,
    0.79258566169775524,
    0.80721424199928538,
    0.82114030043221409,
    0.83436444346322791,
    0.84689105151579092,
    0.85872798374405201,
    0.8698862677504402,
    0.88037977964788761,
    0.89022491953698224,
    0.89944028707560153,
    0.90804636137828665,
    0.91606518900928735,
    0.92352008333993718,
    0.93043533804061507,
    0.93683595698060074,
    0.94274740232572096,
    0.94819536216175471,
    0.95320553853823398,
    0.95780345642690978,
    0.96201429372722613,
    0.96586273212820628,
    0.96937282835526217,
    0.97256790509087188,
    0.97547046065946141,
    0.97810209640784973,
    0.98048346059088765,
    0.98263420748512265,
    0.98457297039824909,
    0.98631734721572362,
    0.98788389712467517,
    0.98928814717589209,
    0.99054460738370942,
    0.99166679311792705,
    0.99266725360803665,
    0.99355760545594951,
    0.99434857013508615,
    0.99505001454023645,
    0.99567099374098311,
    0.99621979517986459,
    0.9967039836439644,
    0.99713044642317017,
    0.9975054381493903,
    0.99783462488763719,
    0.99812312712132756,
    0.99837556134011718,
    0.99859607999905975,
    0.99878840967211291,
    0.99895588727183693,
    0.99910149425004724,
    0.99922788873170554,
    0.99933743556664578,
    0.99943223431115569,
    0.99951414517437531,
    0.99958481298320345,
    0.99964568923443831,
    0.99969805231449738,
    0.99974302597570308,
    0.99978159616413864,
    0.99981462629781148,
    0.99984287109565639,
    0.99986698905805138,
    0.99988755369830917,
    0.99990506362227416,
    0.99991995154994717,
    0.99993259236917009,
    0.9999433103070029,
    0.99995238529968811,
    0.99996005863712589,
    0.99996653795272072,
    0.99997200162437438,
    0.99997660264737631,
    0.99998047203505558,
    0.99998372179832118,
    0.99998644755071209,
    0.99998873078129036,
    0.99999064083367772,
    0.99999223662577597,
    0.99999356814120077,
    0.99999467772022177,
    0.99999560117503272,
    0.99999636875144404,
    0.99999700595660768,
    0.99999753427014149,
    0.99999797175397731,
    0.9999983335744258,
    0.99999863244831766,
    0.99999887902359663,
    0.99999908220344835,
    0.99999924942187046,
    0.99999938687757439,
    0.99999949973218849,
    0.99999959227794055,
    0.9999996680792913,
    0.99999973009237342,
    0.99999978076555873,
    0.99999982212400051,
    0.99999985584059725,
    0.99999988329546696,
    0.99999990562571739,
    0.99999992376703328,
    0.99999993848837321,
    0.99999995042087841,
};

}  // namespace polymerlab::fluctuations::detail

#endif
