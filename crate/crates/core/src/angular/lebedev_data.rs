// Generated from the Lebedev-Laikov orbit tables. Do not edit by hand.

use super::lebedev::Orbit;

pub(crate) const RULES: &[(usize, usize, &[Orbit])] = &[
    (6, 3, GEN_6),
    (14, 5, GEN_14),
    (26, 7, GEN_26),
    (38, 9, GEN_38),
    (50, 11, GEN_50),
    (74, 13, GEN_74),
    (86, 15, GEN_86),
    (110, 17, GEN_110),
    (146, 19, GEN_146),
    (170, 21, GEN_170),
    (194, 23, GEN_194),
    (230, 25, GEN_230),
    (266, 27, GEN_266),
    (302, 29, GEN_302),
    (350, 31, GEN_350),
    (434, 35, GEN_434),
    (590, 41, GEN_590),
    (770, 47, GEN_770),
    (974, 53, GEN_974),
    (1202, 59, GEN_1202),
    (1454, 65, GEN_1454),
    (1730, 71, GEN_1730),
    (2030, 77, GEN_2030),
    (2354, 83, GEN_2354),
    (2702, 89, GEN_2702),
    (3074, 95, GEN_3074),
    (3470, 101, GEN_3470),
    (3890, 107, GEN_3890),
    (4334, 113, GEN_4334),
    (4802, 119, GEN_4802),
    (5294, 125, GEN_5294),
    (5810, 131, GEN_5810),
];

const GEN_6: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.1666666666666667 },
];

const GEN_14: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.06666666666666667 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.075 },
];

const GEN_26: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.04761904761904762 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.0380952380952381 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.03214285714285714 },
];

const GEN_38: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.009523809523809525 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.03214285714285714 },
    Orbit { class: 5, a: 0.4597008433809831, b: 0.0, v: 0.02857142857142857 },
];

const GEN_50: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.0126984126984127 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.02257495590828924 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.02109375 },
    Orbit { class: 4, a: 0.3015113445777636, b: 0.0, v: 0.02017333553791887 },
];

const GEN_74: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.0005130671797338464 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.01660406956574204 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: -0.02958603896103896 },
    Orbit { class: 4, a: 0.4803844614152614, b: 0.0, v: 0.02657620708215946 },
    Orbit { class: 5, a: 0.3207726489807764, b: 0.0, v: 0.01652217099371571 },
];

const GEN_86: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.01154401154401154 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.01194390908585628 },
    Orbit { class: 4, a: 0.3696028464541502, b: 0.0, v: 0.0111105557106034 },
    Orbit { class: 4, a: 0.6943540066026664, b: 0.0, v: 0.01187650129453714 },
    Orbit { class: 5, a: 0.3742430390903412, b: 0.0, v: 0.01181230374690448 },
];

const GEN_110: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.003828270494937162 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.009793737512487513 },
    Orbit { class: 4, a: 0.1851156353447362, b: 0.0, v: 0.008211737283191111 },
    Orbit { class: 4, a: 0.6904210483822922, b: 0.0, v: 0.009942814891178103 },
    Orbit { class: 4, a: 0.3956894730559419, b: 0.0, v: 0.009595471336070962 },
    Orbit { class: 5, a: 0.4783690288121502, b: 0.0, v: 0.009694996361663029 },
];

const GEN_146: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.0005996313688621381 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.007372999718620756 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.007210515360144488 },
    Orbit { class: 4, a: 0.6764410400114264, b: 0.0, v: 0.007116355493117555 },
    Orbit { class: 4, a: 0.4174961227965453, b: 0.0, v: 0.006753829486314477 },
    Orbit { class: 4, a: 0.1574676672039082, b: 0.0, v: 0.007574394159054034 },
    Orbit { class: 6, a: 0.1403553811713183, b: 0.4493328323269557, v: 0.006991087353303262 },
];

const GEN_170: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.005544842902037365 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.006071332770670752 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.006383674773515093 },
    Orbit { class: 4, a: 0.2551252621114134, b: 0.0, v: 0.00518338758774779 },
    Orbit { class: 4, a: 0.6743601460362766, b: 0.0, v: 0.006317929009813725 },
    Orbit { class: 4, a: 0.431891069671941, b: 0.0, v: 0.006201670006589077 },
    Orbit { class: 5, a: 0.2613931360335988, b: 0.0, v: 0.005477143385137348 },
    Orbit { class: 6, a: 0.4990453161796037, b: 0.1446630744325115, v: 0.005968383987681156 },
];

const GEN_194: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.001782340447244611 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.005716905949977102 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.005573383178848738 },
    Orbit { class: 4, a: 0.6712973442695226, b: 0.0, v: 0.005608704082587997 },
    Orbit { class: 4, a: 0.2892465627575439, b: 0.0, v: 0.005158237711805383 },
    Orbit { class: 4, a: 0.4446933178717437, b: 0.0, v: 0.005518771467273614 },
    Orbit { class: 4, a: 0.1299335447650067, b: 0.0, v: 0.004106777028169394 },
    Orbit { class: 5, a: 0.3457702197611283, b: 0.0, v: 0.005051846064614808 },
    Orbit { class: 6, a: 0.159041710538353, b: 0.8360360154824589, v: 0.005530248916233094 },
];

const GEN_230: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: -0.05522639919727325 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.004450274607445226 },
    Orbit { class: 4, a: 0.4492044687397611, b: 0.0, v: 0.004496841067921404 },
    Orbit { class: 4, a: 0.2520419490210201, b: 0.0, v: 0.00504915345047875 },
    Orbit { class: 4, a: 0.6981906658447242, b: 0.0, v: 0.003976408018051883 },
    Orbit { class: 4, a: 0.658740524346096, b: 0.0, v: 0.004401400650381014 },
    Orbit { class: 4, a: 0.0403854405009766, b: 0.0, v: 0.01724544350544401 },
    Orbit { class: 5, a: 0.5823842309715584, b: 0.0, v: 0.004231083095357343 },
    Orbit { class: 5, a: 0.3545877390518688, b: 0.0, v: 0.005198069864064399 },
    Orbit { class: 6, a: 0.2272181808998187, b: 0.4864661535886647, v: 0.004695720972568883 },
];

const GEN_266: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: -0.001313769127326952 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: -0.002522728704859336 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.004186853881700583 },
    Orbit { class: 4, a: 0.7039373391585475, b: 0.0, v: 0.005315167977810885 },
    Orbit { class: 4, a: 0.1012526248572414, b: 0.0, v: 0.004047142377086219 },
    Orbit { class: 4, a: 0.4647448726420539, b: 0.0, v: 0.00411248239440699 },
    Orbit { class: 4, a: 0.3277420654971629, b: 0.0, v: 0.003595584899758782 },
    Orbit { class: 4, a: 0.6620338663699974, b: 0.0, v: 0.004256131351428158 },
    Orbit { class: 5, a: 0.8506508083520399, b: 0.0, v: 0.00422958270064724 },
    Orbit { class: 6, a: 0.3233484542692899, b: 0.1153112011009701, v: 0.004080914225780505 },
    Orbit { class: 6, a: 0.2314790158712601, b: 0.5244939240922365, v: 0.004071467593830964 },
];

const GEN_302: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.0008545911725128148 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.003599119285025571 },
    Orbit { class: 4, a: 0.3515640345570105, b: 0.0, v: 0.003449788424305883 },
    Orbit { class: 4, a: 0.6566329410219612, b: 0.0, v: 0.003604822601419882 },
    Orbit { class: 4, a: 0.4729054132581005, b: 0.0, v: 0.003576729661743367 },
    Orbit { class: 4, a: 0.09618308522614784, b: 0.0, v: 0.002352101413689164 },
    Orbit { class: 4, a: 0.2219645236294178, b: 0.0, v: 0.003108953122413675 },
    Orbit { class: 4, a: 0.7011766416089545, b: 0.0, v: 0.003650045807677255 },
    Orbit { class: 5, a: 0.2644152887060663, b: 0.0, v: 0.002982344963171804 },
    Orbit { class: 5, a: 0.5718955891878961, b: 0.0, v: 0.00360082093221646 },
    Orbit { class: 6, a: 0.2510034751770465, b: 0.8000727494073951, v: 0.003571540554273387 },
    Orbit { class: 6, a: 0.1233548532583327, b: 0.4127724083168531, v: 0.00339231220500617 },
];

const GEN_350: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.003006796749453936 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.003050627745650771 },
    Orbit { class: 4, a: 0.7068965463912316, b: 0.0, v: 0.001621104600288991 },
    Orbit { class: 4, a: 0.4794682625712025, b: 0.0, v: 0.003005701484901752 },
    Orbit { class: 4, a: 0.1927533154878019, b: 0.0, v: 0.002990992529653774 },
    Orbit { class: 4, a: 0.6930357961327123, b: 0.0, v: 0.002982170644107595 },
    Orbit { class: 4, a: 0.3608302115520091, b: 0.0, v: 0.002721564237310992 },
    Orbit { class: 4, a: 0.6498486161496169, b: 0.0, v: 0.003033513795811141 },
    Orbit { class: 5, a: 0.1932945013230339, b: 0.0, v: 0.003007949555218533 },
    Orbit { class: 5, a: 0.3800494919899303, b: 0.0, v: 0.002881964603055307 },
    Orbit { class: 6, a: 0.2899558825499574, b: 0.7934537856582315, v: 0.002958357626535696 },
    Orbit { class: 6, a: 0.09684121455103957, b: 0.8280801506686862, v: 0.003036020026407088 },
    Orbit { class: 6, a: 0.1833434647041659, b: 0.9074658265305127, v: 0.002832187403926303 },
];

const GEN_434: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.0005265897968224436 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.002548219972002607 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.002512317418927307 },
    Orbit { class: 4, a: 0.6909346307509111, b: 0.0, v: 0.002530403801186355 },
    Orbit { class: 4, a: 0.1774836054609158, b: 0.0, v: 0.002014279020918528 },
    Orbit { class: 4, a: 0.4914342637784746, b: 0.0, v: 0.002501725168402936 },
    Orbit { class: 4, a: 0.6456664707424256, b: 0.0, v: 0.002513267174597564 },
    Orbit { class: 4, a: 0.2861289010307638, b: 0.0, v: 0.002302694782227416 },
    Orbit { class: 4, a: 0.07568084367178018, b: 0.0, v: 0.001462495621594614 },
    Orbit { class: 4, a: 0.3927259763368002, b: 0.0, v: 0.00244537343731298 },
    Orbit { class: 5, a: 0.8818132877794288, b: 0.0, v: 0.002417442375638981 },
    Orbit { class: 5, a: 0.9776428111182649, b: 0.0, v: 0.001910951282179532 },
    Orbit { class: 6, a: 0.2054823696403044, b: 0.8689460322872412, v: 0.002416930044324775 },
    Orbit { class: 6, a: 0.5905157048925271, b: 0.7999278543857286, v: 0.002512236854563495 },
    Orbit { class: 6, a: 0.5550152361076807, b: 0.7717462626915901, v: 0.002496644054553086 },
    Orbit { class: 6, a: 0.9371809858553722, b: 0.3344363145343455, v: 0.002236607760437849 },
];

const GEN_590: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.0003095121295306187 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.001852379698597489 },
    Orbit { class: 4, a: 0.7040954938227469, b: 0.0, v: 0.001871790639277744 },
    Orbit { class: 4, a: 0.6807744066455244, b: 0.0, v: 0.001858812585438317 },
    Orbit { class: 4, a: 0.6372546939258752, b: 0.0, v: 0.001852028828296213 },
    Orbit { class: 4, a: 0.5044419707800358, b: 0.0, v: 0.001846715956151242 },
    Orbit { class: 4, a: 0.4215761784010967, b: 0.0, v: 0.001818471778162769 },
    Orbit { class: 4, a: 0.3317920736472123, b: 0.0, v: 0.001749564657281154 },
    Orbit { class: 4, a: 0.2384736701421887, b: 0.0, v: 0.001617210647254411 },
    Orbit { class: 4, a: 0.1459036449157763, b: 0.0, v: 0.001384737234851692 },
    Orbit { class: 4, a: 0.06095034115507196, b: 0.0, v: 0.000976433116505105 },
    Orbit { class: 5, a: 0.6116843442009876, b: 0.0, v: 0.001857161196774078 },
    Orbit { class: 5, a: 0.3964755348199858, b: 0.0, v: 0.001705153996395864 },
    Orbit { class: 5, a: 0.1724782009907724, b: 0.0, v: 0.001300321685886048 },
    Orbit { class: 6, a: 0.561026380862206, b: 0.3518280927733519, v: 0.001842866472905286 },
    Orbit { class: 6, a: 0.474239284255198, b: 0.263471665593795, v: 0.001802658934377451 },
    Orbit { class: 6, a: 0.598412649788538, b: 0.1816640840360209, v: 0.00184983056044366 },
    Orbit { class: 6, a: 0.3791035407695563, b: 0.1720795225656878, v: 0.001713904507106709 },
    Orbit { class: 6, a: 0.2778673190586244, b: 0.08213021581932511, v: 0.001555213603396808 },
    Orbit { class: 6, a: 0.5033564271075117, b: 0.08999205842074876, v: 0.001802239128008525 },
];

const GEN_770: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.0002192942088181184 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.00143643361731908 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.001421940344335877 },
    Orbit { class: 4, a: 0.0508720441050236, b: 0.0, v: 0.0006798123511050502 },
    Orbit { class: 4, a: 0.1228198790178831, b: 0.0, v: 0.0009913184235294911 },
    Orbit { class: 4, a: 0.2026890814408786, b: 0.0, v: 0.001180207833238949 },
    Orbit { class: 4, a: 0.2847745156464294, b: 0.0, v: 0.001296599602080921 },
    Orbit { class: 4, a: 0.3656719078978026, b: 0.0, v: 0.001365871427428316 },
    Orbit { class: 4, a: 0.4428264886713469, b: 0.0, v: 0.001402988604775325 },
    Orbit { class: 4, a: 0.5140619627249735, b: 0.0, v: 0.001418645563595609 },
    Orbit { class: 4, a: 0.6306401219166803, b: 0.0, v: 0.001421376741851662 },
    Orbit { class: 4, a: 0.6716883332022612, b: 0.0, v: 0.001423996475490962 },
    Orbit { class: 4, a: 0.6979792685336881, b: 0.0, v: 0.001431554042178567 },
    Orbit { class: 5, a: 0.1446865674195309, b: 0.0, v: 0.0009254401499865368 },
    Orbit { class: 5, a: 0.3390263475411216, b: 0.0, v: 0.001250239995053509 },
    Orbit { class: 5, a: 0.5335804651263506, b: 0.0, v: 0.00139436584332923 },
    Orbit { class: 6, a: 0.06944024393349413, b: 0.2355187894242326, v: 0.001127089094671749 },
    Orbit { class: 6, a: 0.226900410952946, b: 0.410218247404573, v: 0.00134575376091067 },
    Orbit { class: 6, a: 0.08025574607775339, b: 0.6214302417481605, v: 0.001424957283316783 },
    Orbit { class: 6, a: 0.1467999527896572, b: 0.3245284345717394, v: 0.00126152334123775 },
    Orbit { class: 6, a: 0.1571507769824727, b: 0.522448218969663, v: 0.001392547106052696 },
    Orbit { class: 6, a: 0.2365702993157246, b: 0.6017546634089558, v: 0.001418761677877656 },
    Orbit { class: 6, a: 0.07714815866765733, b: 0.4346575516141163, v: 0.001338366684479554 },
    Orbit { class: 6, a: 0.306293666621073, b: 0.4908826589037616, v: 0.001393700862676131 },
    Orbit { class: 6, a: 0.3822477379524787, b: 0.56487681490995, v: 0.001415914757466932 },
];

const GEN_974: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.0001438294190527431 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.001125772288287004 },
    Orbit { class: 4, a: 0.04292963545341347, b: 0.0, v: 0.0004948029341949241 },
    Orbit { class: 4, a: 0.1051426854086404, b: 0.0, v: 0.000735799010912547 },
    Orbit { class: 4, a: 0.1750024867623087, b: 0.0, v: 0.0008889132771304384 },
    Orbit { class: 4, a: 0.2477653379650257, b: 0.0, v: 0.0009888347838921435 },
    Orbit { class: 4, a: 0.3206567123955957, b: 0.0, v: 0.001053299681709471 },
    Orbit { class: 4, a: 0.3916520749849983, b: 0.0, v: 0.001092778807014578 },
    Orbit { class: 4, a: 0.4590825874187624, b: 0.0, v: 0.001114389394063227 },
    Orbit { class: 4, a: 0.5214563888415861, b: 0.0, v: 0.001123724788051555 },
    Orbit { class: 4, a: 0.6253170244654199, b: 0.0, v: 0.001125239325243814 },
    Orbit { class: 4, a: 0.663792674452317, b: 0.0, v: 0.001126153271815905 },
    Orbit { class: 4, a: 0.6910410398498301, b: 0.0, v: 0.001130286931123841 },
    Orbit { class: 4, a: 0.705290700745776, b: 0.0, v: 0.001134986534363955 },
    Orbit { class: 5, a: 0.123668676265799, b: 0.0, v: 0.0006823367927109931 },
    Orbit { class: 5, a: 0.2940777114468387, b: 0.0, v: 0.0009454158160447096 },
    Orbit { class: 5, a: 0.4697753849207649, b: 0.0, v: 0.001074429975385679 },
    Orbit { class: 5, a: 0.6334563241139567, b: 0.0, v: 0.001129300086569132 },
    Orbit { class: 6, a: 0.05974048614181342, b: 0.2029128752777523, v: 0.0008436884500901954 },
    Orbit { class: 6, a: 0.1375760408473636, b: 0.4602621942484054, v: 0.001075255720448885 },
    Orbit { class: 6, a: 0.3391016526336286, b: 0.5030673999662036, v: 0.001108577236864462 },
    Orbit { class: 6, a: 0.127167519143982, b: 0.2817606422442134, v: 0.0009566475323783357 },
    Orbit { class: 6, a: 0.2693120740413512, b: 0.4331561291720157, v: 0.001080663250717391 },
    Orbit { class: 6, a: 0.1419786452601918, b: 0.6256167358580814, v: 0.001126797131196295 },
    Orbit { class: 6, a: 0.06709284600738255, b: 0.3798395216859157, v: 0.001022568715358061 },
    Orbit { class: 6, a: 0.07057738183256172, b: 0.551750542142352, v: 0.001108960267713108 },
    Orbit { class: 6, a: 0.2783888477882155, b: 0.6029619156159187, v: 0.001122790653435766 },
    Orbit { class: 6, a: 0.1979578938917407, b: 0.3589606329589096, v: 0.00103240184711746 },
    Orbit { class: 6, a: 0.2087307061103274, b: 0.5348666438135476, v: 0.001107249382283854 },
    Orbit { class: 6, a: 0.4055122137872836, b: 0.5674997546074373, v: 0.001121780048519972 },
];

const GEN_1202: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 0.0001105189233267572 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.0009205232738090741 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0009133159786443561 },
    Orbit { class: 4, a: 0.03712636449657089, b: 0.0, v: 0.0003690421898017899 },
    Orbit { class: 4, a: 0.09140060412262223, b: 0.0, v: 0.000560399092868066 },
    Orbit { class: 4, a: 0.1531077852469906, b: 0.0, v: 0.0006865297629282609 },
    Orbit { class: 4, a: 0.2180928891660612, b: 0.0, v: 0.000772033855114563 },
    Orbit { class: 4, a: 0.2839874532200175, b: 0.0, v: 0.0008301545958894795 },
    Orbit { class: 4, a: 0.3491177600963764, b: 0.0, v: 0.0008686692550179628 },
    Orbit { class: 4, a: 0.4121431461444309, b: 0.0, v: 0.000892707628584689 },
    Orbit { class: 4, a: 0.4718993627149127, b: 0.0, v: 0.0009060820238568219 },
    Orbit { class: 4, a: 0.5273145452842337, b: 0.0, v: 0.0009119777254940867 },
    Orbit { class: 4, a: 0.6209475332444019, b: 0.0, v: 0.0009128720138604181 },
    Orbit { class: 4, a: 0.6569722711857291, b: 0.0, v: 0.0009130714935691735 },
    Orbit { class: 4, a: 0.6841788309070143, b: 0.0, v: 0.0009152873784554116 },
    Orbit { class: 4, a: 0.7012604330123631, b: 0.0, v: 0.0009187436274321654 },
    Orbit { class: 5, a: 0.1072382215478166, b: 0.0, v: 0.0005176977312965694 },
    Orbit { class: 5, a: 0.2582068959496968, b: 0.0, v: 0.0007331143682101417 },
    Orbit { class: 5, a: 0.4172752955306717, b: 0.0, v: 0.0008463232836379928 },
    Orbit { class: 5, a: 0.5700366911792503, b: 0.0, v: 0.0009031122694253992 },
    Orbit { class: 6, a: 0.9827986018263947, b: 0.1771774022615325, v: 0.0006485778453163257 },
    Orbit { class: 6, a: 0.9624249230326228, b: 0.2475716463426288, v: 0.0007435030910982369 },
    Orbit { class: 6, a: 0.9402007994128811, b: 0.3354616289066489, v: 0.0007998527891839054 },
    Orbit { class: 6, a: 0.9320822040143202, b: 0.3173615246611977, v: 0.0008101731497468018 },
    Orbit { class: 6, a: 0.9043674199393299, b: 0.4090268427085357, v: 0.000848338957459433 },
    Orbit { class: 6, a: 0.8912407560074747, b: 0.3854291150669224, v: 0.0008556299257311812 },
    Orbit { class: 6, a: 0.8676435628462708, b: 0.4932221184851285, v: 0.000880320867973826 },
    Orbit { class: 6, a: 0.8581979986041619, b: 0.4785320675922435, v: 0.000881104818242572 },
    Orbit { class: 6, a: 0.8396753624049856, b: 0.4507422593157064, v: 0.0008850282341265444 },
    Orbit { class: 6, a: 0.8165288564022188, b: 0.56321230207621, v: 0.0009021342299040653 },
    Orbit { class: 6, a: 0.8015469370783529, b: 0.54343035696939, v: 0.0009010091677105086 },
    Orbit { class: 6, a: 0.777356306907035, b: 0.5123518486419871, v: 0.0009022692938426915 },
    Orbit { class: 6, a: 0.7661621213900394, b: 0.6394279634749102, v: 0.0009158016174693465 },
    Orbit { class: 6, a: 0.755358414353351, b: 0.6269805509024392, v: 0.0009131578003189435 },
    Orbit { class: 6, a: 0.7344305757559503, b: 0.603116169309631, v: 0.0009107813579482705 },
    Orbit { class: 6, a: 0.7043837184021765, b: 0.5693702498468441, v: 0.0009105760258970126 },
];

const GEN_1454: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 7.777160743261247e-05 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0007557646413004701 },
    Orbit { class: 4, a: 0.03229290663413854, b: 0.0, v: 0.0002841633806090617 },
    Orbit { class: 4, a: 0.08036733271462222, b: 0.0, v: 0.0004374419127053555 },
    Orbit { class: 4, a: 0.1354289960531653, b: 0.0, v: 0.0005417174740872172 },
    Orbit { class: 4, a: 0.1938963861114426, b: 0.0, v: 0.0006148000891358593 },
    Orbit { class: 4, a: 0.2537343715011275, b: 0.0, v: 0.0006664394485800704 },
    Orbit { class: 4, a: 0.313525143475257, b: 0.0, v: 0.000702503935692322 },
    Orbit { class: 4, a: 0.3721558339375338, b: 0.0, v: 0.0007268511789249627 },
    Orbit { class: 4, a: 0.4286809575195696, b: 0.0, v: 0.0007422637534208629 },
    Orbit { class: 4, a: 0.4822510128282994, b: 0.0, v: 0.0007509545035841214 },
    Orbit { class: 4, a: 0.5320679333566263, b: 0.0, v: 0.0007548535057718401 },
    Orbit { class: 4, a: 0.6172998195394274, b: 0.0, v: 0.0007554088969774001 },
    Orbit { class: 4, a: 0.6510679849127481, b: 0.0, v: 0.0007553147174442808 },
    Orbit { class: 4, a: 0.677731525168736, b: 0.0, v: 0.0007564767653292297 },
    Orbit { class: 4, a: 0.6963109410648741, b: 0.0, v: 0.000758799180851873 },
    Orbit { class: 4, a: 0.7058935009831749, b: 0.0, v: 0.0007608261832033027 },
    Orbit { class: 5, a: 0.9955546194091857, b: 0.0, v: 0.0004021680447874916 },
    Orbit { class: 5, a: 0.9734115901794209, b: 0.0, v: 0.0005804871793945964 },
    Orbit { class: 5, a: 0.9275693732388626, b: 0.0, v: 0.0006792151955945159 },
    Orbit { class: 5, a: 0.8568022422795103, b: 0.0, v: 0.0007336741211286294 },
    Orbit { class: 5, a: 0.7623495553719372, b: 0.0, v: 0.0007581866300989608 },
    Orbit { class: 6, a: 0.5707522908892223, b: 0.4387028039889501, v: 0.0007538257859800743 },
    Orbit { class: 6, a: 0.5196463388403083, b: 0.3858908414762617, v: 0.0007483517247053123 },
    Orbit { class: 6, a: 0.4646337531215351, b: 0.3301937372343854, v: 0.0007371763661112059 },
    Orbit { class: 6, a: 0.4063901697557691, b: 0.2725423573563777, v: 0.0007183448895756934 },
    Orbit { class: 6, a: 0.3456329466643087, b: 0.213951023749525, v: 0.0006895815529822191 },
    Orbit { class: 6, a: 0.2831395121050332, b: 0.1555922309786647, v: 0.0006480105801792886 },
    Orbit { class: 6, a: 0.219768202292533, b: 0.09892878979686097, v: 0.0005897558896594636 },
    Orbit { class: 6, a: 0.1564696098650355, b: 0.0459864291067551, v: 0.0005095708849247346 },
    Orbit { class: 6, a: 0.6027356673721295, b: 0.3376625140173426, v: 0.0007536906428909755 },
    Orbit { class: 6, a: 0.5496032320255096, b: 0.2822301309727988, v: 0.0007472505965575118 },
    Orbit { class: 6, a: 0.4921707755234567, b: 0.224863234259254, v: 0.0007343017132279698 },
    Orbit { class: 6, a: 0.4309422998598483, b: 0.1666224723456479, v: 0.0007130871582177445 },
    Orbit { class: 6, a: 0.3664108182313672, b: 0.1086964901822169, v: 0.0006817022032112776 },
    Orbit { class: 6, a: 0.2990189057758436, b: 0.05251989784120085, v: 0.0006380941145604121 },
    Orbit { class: 6, a: 0.6268724013144998, b: 0.2297523657550023, v: 0.000755038137792031 },
    Orbit { class: 6, a: 0.5707324144834607, b: 0.17230806070938, v: 0.0007478646640144802 },
    Orbit { class: 6, a: 0.5096360901960365, b: 0.1140238465390513, v: 0.000733591872060122 },
    Orbit { class: 6, a: 0.4438729938312456, b: 0.05611522095882537, v: 0.0007110120527658118 },
    Orbit { class: 6, a: 0.6419978471082389, b: 0.1164174423140873, v: 0.0007571363978689501 },
    Orbit { class: 6, a: 0.5817218061802611, b: 0.05797589531445219, v: 0.0007489908329079233 },
];

const GEN_1730: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 6.309049437420976e-05 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.0006398287705571748 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.000635718507353072 },
    Orbit { class: 4, a: 0.02860923126194662, b: 0.0, v: 0.0002221207162188168 },
    Orbit { class: 4, a: 0.07142556767711522, b: 0.0, v: 0.0003475784022286848 },
    Orbit { class: 4, a: 0.1209199540995559, b: 0.0, v: 0.0004350742443589804 },
    Orbit { class: 4, a: 0.1738673106594379, b: 0.0, v: 0.0004978569136522127 },
    Orbit { class: 4, a: 0.2284645438467734, b: 0.0, v: 0.0005435036221998053 },
    Orbit { class: 4, a: 0.2834807671701512, b: 0.0, v: 0.0005765913388219542 },
    Orbit { class: 4, a: 0.3379680145467339, b: 0.0, v: 0.0006001200359226003 },
    Orbit { class: 4, a: 0.3911355454819537, b: 0.0, v: 0.0006162178172717512 },
    Orbit { class: 4, a: 0.4422860353001403, b: 0.0, v: 0.0006265218152438484 },
    Orbit { class: 4, a: 0.4907781568726057, b: 0.0, v: 0.0006323987160974212 },
    Orbit { class: 4, a: 0.5360006153211468, b: 0.0, v: 0.0006350767851540569 },
    Orbit { class: 4, a: 0.6142105973596603, b: 0.0, v: 0.0006354362775297107 },
    Orbit { class: 4, a: 0.6459300387977503, b: 0.0, v: 0.0006352302462706236 },
    Orbit { class: 4, a: 0.6718056125089225, b: 0.0, v: 0.0006358117881417972 },
    Orbit { class: 4, a: 0.6910888533186254, b: 0.0, v: 0.0006373101590310116 },
    Orbit { class: 4, a: 0.7030467416823252, b: 0.0, v: 0.0006390428961368665 },
    Orbit { class: 5, a: 0.08354951166354646, b: 0.0, v: 0.0003186913449946576 },
    Orbit { class: 5, a: 0.2050143009099486, b: 0.0, v: 0.0004678028558591711 },
    Orbit { class: 5, a: 0.3370208290706637, b: 0.0, v: 0.0005538829697598626 },
    Orbit { class: 5, a: 0.4689051484233963, b: 0.0, v: 0.0006044475907190476 },
    Orbit { class: 5, a: 0.5939400424557334, b: 0.0, v: 0.0006313575103509012 },
    Orbit { class: 6, a: 0.1394983311832261, b: 0.04097581162050343, v: 0.000407862643185563 },
    Orbit { class: 6, a: 0.1967999180485014, b: 0.08851987391293348, v: 0.0004759933057812725 },
    Orbit { class: 6, a: 0.2546183732548967, b: 0.1397680182969819, v: 0.000526815118641344 },
    Orbit { class: 6, a: 0.3121281074713875, b: 0.1929452542226526, v: 0.0005643048560507316 },
    Orbit { class: 6, a: 0.3685981078502492, b: 0.2467898337061562, v: 0.0005914501076613073 },
    Orbit { class: 6, a: 0.4233760321547856, b: 0.3003104124785409, v: 0.0006104561257874195 },
    Orbit { class: 6, a: 0.4758671236059246, b: 0.3526684328175033, v: 0.0006230252860707806 },
    Orbit { class: 6, a: 0.5255178579796463, b: 0.4031134861145713, v: 0.0006305618761760796 },
    Orbit { class: 6, a: 0.5718025633734589, b: 0.4509426448342351, v: 0.0006343092767597889 },
    Orbit { class: 6, a: 0.2686927772723415, b: 0.04711322502423248, v: 0.0005176268945737827 },
    Orbit { class: 6, a: 0.3306006819904809, b: 0.09784487303942695, v: 0.0005564840313313692 },
    Orbit { class: 6, a: 0.3904906850594983, b: 0.1505395810025273, v: 0.000585642667103898 },
    Orbit { class: 6, a: 0.447995795190439, b: 0.203972815629605, v: 0.0006066386925777091 },
    Orbit { class: 6, a: 0.502707684891978, b: 0.2571529941121107, v: 0.0006208824962234458 },
    Orbit { class: 6, a: 0.5542087392260217, b: 0.309219137581567, v: 0.0006296314297822907 },
    Orbit { class: 6, a: 0.6020850887375186, b: 0.3593807506130276, v: 0.0006340423756791859 },
    Orbit { class: 6, a: 0.4019851409179594, b: 0.05063389934378671, v: 0.0005829627677107342 },
    Orbit { class: 6, a: 0.46356145674498, b: 0.1032422269160612, v: 0.000604869337608111 },
    Orbit { class: 6, a: 0.5215860931591575, b: 0.1566322094006254, v: 0.0006202362317732461 },
    Orbit { class: 6, a: 0.5758202499099271, b: 0.2098082827491099, v: 0.0006299005328403779 },
    Orbit { class: 6, a: 0.6259893683876795, b: 0.2618824114553391, v: 0.0006347722390609352 },
    Orbit { class: 6, a: 0.5313795124811891, b: 0.05263245019338556, v: 0.0006203778981238834 },
    Orbit { class: 6, a: 0.5893317955931995, b: 0.1061059730982005, v: 0.0006308414671239979 },
    Orbit { class: 6, a: 0.64262463212158, b: 0.1594171564034221, v: 0.0006362706466959498 },
    Orbit { class: 6, a: 0.6511904367376113, b: 0.0535478953656554, v: 0.0006375414170333233 },
];

const GEN_2030: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 4.656031899197431e-05 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0005421549195295507 },
    Orbit { class: 4, a: 0.02540835336814348, b: 0.0, v: 0.0001778522133346553 },
    Orbit { class: 4, a: 0.06399322800504915, b: 0.0, v: 0.0002811325405682796 },
    Orbit { class: 4, a: 0.1088269469804125, b: 0.0, v: 0.0003548896312631459 },
    Orbit { class: 4, a: 0.1570670798818287, b: 0.0, v: 0.0004090310897173364 },
    Orbit { class: 4, a: 0.2071163932282514, b: 0.0, v: 0.0004493286134169965 },
    Orbit { class: 4, a: 0.2578914044450844, b: 0.0, v: 0.0004793728447962723 },
    Orbit { class: 4, a: 0.3085687558169623, b: 0.0, v: 0.0005015415319164265 },
    Orbit { class: 4, a: 0.3584719706267024, b: 0.0, v: 0.0005175127372677937 },
    Orbit { class: 4, a: 0.4070135594428709, b: 0.0, v: 0.0005285522262081019 },
    Orbit { class: 4, a: 0.4536618626222638, b: 0.0, v: 0.0005356832703713962 },
    Orbit { class: 4, a: 0.4979195686463577, b: 0.0, v: 0.000539791473617517 },
    Orbit { class: 4, a: 0.5393075111126999, b: 0.0, v: 0.000541689944159993 },
    Orbit { class: 4, a: 0.6115617676843916, b: 0.0, v: 0.0005419308476889938 },
    Orbit { class: 4, a: 0.6414308435160159, b: 0.0, v: 0.0005416936902030596 },
    Orbit { class: 4, a: 0.6664099412721607, b: 0.0, v: 0.0005419544338703164 },
    Orbit { class: 4, a: 0.6859161771214913, b: 0.0, v: 0.0005428983656630974 },
    Orbit { class: 4, a: 0.699362559350389, b: 0.0, v: 0.0005442286500098193 },
    Orbit { class: 4, a: 0.706239338771938, b: 0.0, v: 0.0005452250345057301 },
    Orbit { class: 5, a: 0.07479028168349763, b: 0.0, v: 0.000256800249772853 },
    Orbit { class: 5, a: 0.1848951153969366, b: 0.0, v: 0.0003827211700292145 },
    Orbit { class: 5, a: 0.3059529066581305, b: 0.0, v: 0.0004579491561917824 },
    Orbit { class: 5, a: 0.4285556101021362, b: 0.0, v: 0.0005042003969083574 },
    Orbit { class: 5, a: 0.5468758653496526, b: 0.0, v: 0.0005312708889976024 },
    Orbit { class: 5, a: 0.6565821978343439, b: 0.0, v: 0.0005438401790747117 },
    Orbit { class: 6, a: 0.1253901572367117, b: 0.03681917226439641, v: 0.0003316041873197344 },
    Orbit { class: 6, a: 0.1775721510383941, b: 0.07982487607213301, v: 0.0003899113567153771 },
    Orbit { class: 6, a: 0.2305693358216114, b: 0.1264640966592335, v: 0.0004343343327201309 },
    Orbit { class: 6, a: 0.2836502845992063, b: 0.1751585683418957, v: 0.0004679415262318919 },
    Orbit { class: 6, a: 0.336179474623259, b: 0.224799590763267, v: 0.0004930847981631031 },
    Orbit { class: 6, a: 0.3875979172264824, b: 0.2745299257422246, v: 0.0005115031867540091 },
    Orbit { class: 6, a: 0.4374019316999074, b: 0.3236373482441118, v: 0.0005245217148457367 },
    Orbit { class: 6, a: 0.4851275843340022, b: 0.3714967859436741, v: 0.0005332041499895321 },
    Orbit { class: 6, a: 0.5303391803806868, b: 0.4175353646321745, v: 0.0005384583126021542 },
    Orbit { class: 6, a: 0.5726197380596287, b: 0.4612084406355461, v: 0.0005411067210798852 },
    Orbit { class: 6, a: 0.2431520732564863, b: 0.04258040133043952, v: 0.0004259797391468714 },
    Orbit { class: 6, a: 0.3002096800895869, b: 0.08869424306722722, v: 0.0004604931368460021 },
    Orbit { class: 6, a: 0.3558554457457432, b: 0.1368811706510655, v: 0.0004871814878255202 },
    Orbit { class: 6, a: 0.4097782537048887, b: 0.1860739985015033, v: 0.0005072242910074885 },
    Orbit { class: 6, a: 0.4616337666067458, b: 0.2354235077395853, v: 0.000521706984523535 },
    Orbit { class: 6, a: 0.5110707008417874, b: 0.2842074921347011, v: 0.000531578596628031 },
    Orbit { class: 6, a: 0.5577415286163795, b: 0.3317784414984102, v: 0.0005376833708758905 },
    Orbit { class: 6, a: 0.601306043136695, b: 0.37752990020407, v: 0.0005408032092069521 },
    Orbit { class: 6, a: 0.3661596767261781, b: 0.04599367887164592, v: 0.0004842744917904866 },
    Orbit { class: 6, a: 0.4237633153506581, b: 0.09404893773654421, v: 0.000504892607618813 },
    Orbit { class: 6, a: 0.4786328454658452, b: 0.1431377109091971, v: 0.0005202607980478373 },
    Orbit { class: 6, a: 0.5305702076789774, b: 0.192418638884357, v: 0.0005309932388325743 },
    Orbit { class: 6, a: 0.5793436224231788, b: 0.241159094477519, v: 0.0005377419770895208 },
    Orbit { class: 6, a: 0.6247069017094747, b: 0.2886871491583605, v: 0.0005411696331677717 },
    Orbit { class: 6, a: 0.4874315552535204, b: 0.04804978774953206, v: 0.000519799629328242 },
    Orbit { class: 6, a: 0.5427337322059053, b: 0.09716857199366664, v: 0.0005311120836622945 },
    Orbit { class: 6, a: 0.59434937472467, b: 0.1465205839795055, v: 0.0005384309319956951 },
    Orbit { class: 6, a: 0.6421314033564943, b: 0.1953579449803574, v: 0.0005421859504051886 },
    Orbit { class: 6, a: 0.602062837471398, b: 0.04916375015738108, v: 0.0005390948355046314 },
    Orbit { class: 6, a: 0.6529222529856881, b: 0.09861621540127005, v: 0.0005433312705027845 },
];

const GEN_2354: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 3.922616270665292e-05 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.0004703831750854424 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0004678202801282136 },
    Orbit { class: 4, a: 0.02290024646530589, b: 0.0, v: 0.00014378322289799 },
    Orbit { class: 4, a: 0.05779086652271284, b: 0.0, v: 0.0002303572493577644 },
    Orbit { class: 4, a: 0.09863103576375984, b: 0.0, v: 0.0002933110752447454 },
    Orbit { class: 4, a: 0.1428155792982185, b: 0.0, v: 0.0003402905998359838 },
    Orbit { class: 4, a: 0.1888978116601463, b: 0.0, v: 0.0003759138466870372 },
    Orbit { class: 4, a: 0.235909168297021, b: 0.0, v: 0.0004030638447899798 },
    Orbit { class: 4, a: 0.2831228833706171, b: 0.0, v: 0.0004236591432242211 },
    Orbit { class: 4, a: 0.3299495857966693, b: 0.0, v: 0.0004390522656946746 },
    Orbit { class: 4, a: 0.3758840802660796, b: 0.0, v: 0.0004502523466626247 },
    Orbit { class: 4, a: 0.420475183100948, b: 0.0, v: 0.0004580577727783541 },
    Orbit { class: 4, a: 0.4633068518751051, b: 0.0, v: 0.0004631391616615899 },
    Orbit { class: 4, a: 0.5039849474507313, b: 0.0, v: 0.0004660928953698676 },
    Orbit { class: 4, a: 0.5421265793440747, b: 0.0, v: 0.0004674751807936953 },
    Orbit { class: 4, a: 0.609266023055731, b: 0.0, v: 0.000467641490393292 },
    Orbit { class: 4, a: 0.6374654204984869, b: 0.0, v: 0.000467408649234787 },
    Orbit { class: 4, a: 0.6615136472609892, b: 0.0, v: 0.0004674928539483207 },
    Orbit { class: 4, a: 0.6809487285958127, b: 0.0, v: 0.0004680748979686447 },
    Orbit { class: 4, a: 0.6952980021665196, b: 0.0, v: 0.000469044980638904 },
    Orbit { class: 4, a: 0.70412454976954, b: 0.0, v: 0.0004699877075860818 },
    Orbit { class: 5, a: 0.06744033088306065, b: 0.0, v: 0.0002099942281069176 },
    Orbit { class: 5, a: 0.1678684485334166, b: 0.0, v: 0.0003172269150712804 },
    Orbit { class: 5, a: 0.2793559049539613, b: 0.0, v: 0.0003832051358546523 },
    Orbit { class: 5, a: 0.3935264218057639, b: 0.0, v: 0.0004252193818146985 },
    Orbit { class: 5, a: 0.5052629268232558, b: 0.0, v: 0.0004513807963755 },
    Orbit { class: 5, a: 0.6107905315437531, b: 0.0, v: 0.0004657797469114178 },
    Orbit { class: 6, a: 0.1135081039843524, b: 0.03331954884662588, v: 0.0002733362800522836 },
    Orbit { class: 6, a: 0.1612866626099378, b: 0.07247167465436538, v: 0.0003235485368463559 },
    Orbit { class: 6, a: 0.2100786550168205, b: 0.1151539110849745, v: 0.0003624908726013453 },
    Orbit { class: 6, a: 0.2592282009459942, b: 0.1599491097143677, v: 0.0003925540070712828 },
    Orbit { class: 6, a: 0.3081740561320203, b: 0.2058699956028027, v: 0.0004156129781116235 },
    Orbit { class: 6, a: 0.3564289781578164, b: 0.2521624953502911, v: 0.0004330644984623263 },
    Orbit { class: 6, a: 0.4035587288240703, b: 0.2982090785797674, v: 0.0004459677725921312 },
    Orbit { class: 6, a: 0.4491671196373903, b: 0.3434762087235733, v: 0.0004551593004456795 },
    Orbit { class: 6, a: 0.4928854782917489, b: 0.3874831357203437, v: 0.0004613341462749918 },
    Orbit { class: 6, a: 0.5343646791958988, b: 0.4297814821746926, v: 0.0004651019618269806 },
    Orbit { class: 6, a: 0.573268321653099, b: 0.4699402260943537, v: 0.0004670249536100625 },
    Orbit { class: 6, a: 0.2214131583218986, b: 0.03873602040643895, v: 0.0003549555576441708 },
    Orbit { class: 6, a: 0.2741796504750071, b: 0.08089496256902012, v: 0.000385610824524901 },
    Orbit { class: 6, a: 0.3259797439149485, b: 0.1251732177620872, v: 0.0004098622845756882 },
    Orbit { class: 6, a: 0.3765441148826891, b: 0.1706260286403185, v: 0.000428632860426895 },
    Orbit { class: 6, a: 0.4255773574530558, b: 0.2165115147300408, v: 0.0004427802198993945 },
    Orbit { class: 6, a: 0.472779511705843, b: 0.2622089812225259, v: 0.0004530473511488561 },
    Orbit { class: 6, a: 0.5178546895819012, b: 0.3071721431296201, v: 0.0004600805475703138 },
    Orbit { class: 6, a: 0.560514119209746, b: 0.3508998998801138, v: 0.0004644599059958017 },
    Orbit { class: 6, a: 0.6004763319352512, b: 0.3929160876166931, v: 0.0004667274455712508 },
    Orbit { class: 6, a: 0.3352842634946949, b: 0.04202563457288019, v: 0.0004069360518020356 },
    Orbit { class: 6, a: 0.389197162981467, b: 0.0861430975887085, v: 0.0004260442819919195 },
    Orbit { class: 6, a: 0.4409875565542281, b: 0.1314500879380001, v: 0.0004408678508029063 },
    Orbit { class: 6, a: 0.4904893058592484, b: 0.1772189657383859, v: 0.0004518748115548597 },
    Orbit { class: 6, a: 0.537505613876955, b: 0.2228277110050294, v: 0.0004595564875375116 },
    Orbit { class: 6, a: 0.5818255708669969, b: 0.2677179935014386, v: 0.0004643988774315846 },
    Orbit { class: 6, a: 0.6232334858144959, b: 0.3113675035544165, v: 0.0004668827491646946 },
    Orbit { class: 6, a: 0.4489485354492058, b: 0.04409162378368174, v: 0.0004400541823741973 },
    Orbit { class: 6, a: 0.501513687593315, b: 0.08939009917748489, v: 0.0004514512890193797 },
    Orbit { class: 6, a: 0.5511300550512623, b: 0.1351806029383365, v: 0.0004596198627347549 },
    Orbit { class: 6, a: 0.5976720409858, b: 0.1808370355053196, v: 0.0004648659016801781 },
    Orbit { class: 6, a: 0.6409956378989354, b: 0.2257852192301602, v: 0.0004675502017157673 },
    Orbit { class: 6, a: 0.5581222330827514, b: 0.0453217342163716, v: 0.0004598494476455523 },
    Orbit { class: 6, a: 0.6074705984161695, b: 0.09117488031840314, v: 0.0004654916955152048 },
    Orbit { class: 6, a: 0.6532272537379032, b: 0.1369294213140155, v: 0.0004684709779505137 },
    Orbit { class: 6, a: 0.6594761494500487, b: 0.04589901487275583, v: 0.0004691445539106986 },
];

const GEN_2702: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 2.998675149888161e-05 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0004077860529495355 },
    Orbit { class: 4, a: 0.02065562538818703, b: 0.0, v: 0.0001185349192520667 },
    Orbit { class: 4, a: 0.05250918173022379, b: 0.0, v: 0.0001913408643425751 },
    Orbit { class: 4, a: 0.08993480082038376, b: 0.0, v: 0.0002452886577209897 },
    Orbit { class: 4, a: 0.1306023924436019, b: 0.0, v: 0.0002862408183288702 },
    Orbit { class: 4, a: 0.1732060388531418, b: 0.0, v: 0.0003178032258257357 },
    Orbit { class: 4, a: 0.2168727084820249, b: 0.0, v: 0.000342294566763369 },
    Orbit { class: 4, a: 0.2609528309173586, b: 0.0, v: 0.0003612790520235922 },
    Orbit { class: 4, a: 0.3049252927938952, b: 0.0, v: 0.0003758638229818521 },
    Orbit { class: 4, a: 0.3483484138084404, b: 0.0, v: 0.0003868711798859953 },
    Orbit { class: 4, a: 0.3908321549106406, b: 0.0, v: 0.0003949429933189938 },
    Orbit { class: 4, a: 0.4320210071894814, b: 0.0, v: 0.0004006068107541156 },
    Orbit { class: 4, a: 0.4715824795890053, b: 0.0, v: 0.0004043192149672723 },
    Orbit { class: 4, a: 0.5091984794078454, b: 0.0, v: 0.0004064947495808078 },
    Orbit { class: 4, a: 0.5445580145650804, b: 0.0, v: 0.0004075245619813152 },
    Orbit { class: 4, a: 0.6072575796841768, b: 0.0, v: 0.0004076423540893566 },
    Orbit { class: 4, a: 0.6339484505755802, b: 0.0, v: 0.0004074280862251555 },
    Orbit { class: 4, a: 0.6570718257486958, b: 0.0, v: 0.0004074163756012244 },
    Orbit { class: 4, a: 0.6762557330090709, b: 0.0, v: 0.0004077647795071246 },
    Orbit { class: 4, a: 0.691116169692379, b: 0.0, v: 0.000408451755278253 },
    Orbit { class: 4, a: 0.701284191165996, b: 0.0, v: 0.0004092468459224052 },
    Orbit { class: 4, a: 0.706455927241002, b: 0.0, v: 0.0004097872687240906 },
    Orbit { class: 5, a: 0.06123554989894765, b: 0.0, v: 0.0001738986811745028 },
    Orbit { class: 5, a: 0.1533070348312393, b: 0.0, v: 0.0002659616045280191 },
    Orbit { class: 5, a: 0.2563902605244206, b: 0.0, v: 0.0003240596008171533 },
    Orbit { class: 5, a: 0.3629346991663361, b: 0.0, v: 0.0003621195964432943 },
    Orbit { class: 5, a: 0.4683949968987538, b: 0.0, v: 0.0003868838330760539 },
    Orbit { class: 5, a: 0.5694479240657953, b: 0.0, v: 0.0004018911532693111 },
    Orbit { class: 5, a: 0.6634465430993955, b: 0.0, v: 0.0004089929432983252 },
    Orbit { class: 6, a: 0.1033958573552305, b: 0.03034544009063584, v: 0.0002279907527706409 },
    Orbit { class: 6, a: 0.1473521412414395, b: 0.06618803044247135, v: 0.0002715205490578897 },
    Orbit { class: 6, a: 0.1924552158705967, b: 0.1054431128987715, v: 0.0003057917896703976 },
    Orbit { class: 6, a: 0.2381094362890328, b: 0.1468263551238858, v: 0.0003326913052452555 },
    Orbit { class: 6, a: 0.283812170793676, b: 0.1894486108187886, v: 0.0003537334711890037 },
    Orbit { class: 6, a: 0.3291323133373415, b: 0.2326374238761579, v: 0.0003700567500783129 },
    Orbit { class: 6, a: 0.373689697874146, b: 0.2758485808485768, v: 0.0003825245372589122 },
    Orbit { class: 6, a: 0.4171406040760013, b: 0.3186179331996921, v: 0.0003918125171518296 },
    Orbit { class: 6, a: 0.4591677985256915, b: 0.3605329796303794, v: 0.0003984720419937579 },
    Orbit { class: 6, a: 0.4994733831718418, b: 0.4012147253586509, v: 0.0004029746003338211 },
    Orbit { class: 6, a: 0.5377731830445096, b: 0.4403050025570692, v: 0.0004057428632156627 },
    Orbit { class: 6, a: 0.5737917830001331, b: 0.4774565904277483, v: 0.0004071719274114857 },
    Orbit { class: 6, a: 0.2027323586271389, b: 0.03544122504976147, v: 0.0002990236950664119 },
    Orbit { class: 6, a: 0.2516942375187273, b: 0.07418304388646328, v: 0.0003262951734212878 },
    Orbit { class: 6, a: 0.3000227995257181, b: 0.1150502745727186, v: 0.0003482634608242413 },
    Orbit { class: 6, a: 0.3474806691046342, b: 0.1571963371209364, v: 0.0003656596681700892 },
    Orbit { class: 6, a: 0.3938103180359209, b: 0.19996318772471, v: 0.0003791740467794218 },
    Orbit { class: 6, a: 0.4387519590455703, b: 0.2428073457846535, v: 0.0003894034450156905 },
    Orbit { class: 6, a: 0.4820503960077787, b: 0.2852575132906155, v: 0.0003968600245508371 },
    Orbit { class: 6, a: 0.5234573778475101, b: 0.3268884208674639, v: 0.000401993135142005 },
    Orbit { class: 6, a: 0.5627318647235282, b: 0.3673033321675939, v: 0.0004052108801278599 },
    Orbit { class: 6, a: 0.5996390607156954, b: 0.406121155183029, v: 0.0004068978613940934 },
    Orbit { class: 6, a: 0.3084780753791947, b: 0.03860125523100059, v: 0.0003454275351319704 },
    Orbit { class: 6, a: 0.3589988275920223, b: 0.07928938987104867, v: 0.000362996353700792 },
    Orbit { class: 6, a: 0.4078628415881973, b: 0.1212614643030087, v: 0.0003770187233889873 },
    Orbit { class: 6, a: 0.4549287258889735, b: 0.1638770827382693, v: 0.0003878608613694378 },
    Orbit { class: 6, a: 0.5000278512957279, b: 0.2065965798260176, v: 0.0003959065270221274 },
    Orbit { class: 6, a: 0.5429785044928199, b: 0.2489436378852235, v: 0.000401528697546357 },
    Orbit { class: 6, a: 0.5835939850491711, b: 0.2904811368946891, v: 0.0004050866785614717 },
    Orbit { class: 6, a: 0.6216870353444856, b: 0.3307941957666609, v: 0.0004069320185051913 },
    Orbit { class: 6, a: 0.4151104662709091, b: 0.04064829146052554, v: 0.0003760120964062763 },
    Orbit { class: 6, a: 0.4649804275009218, b: 0.08258424547294756, v: 0.0003870969564418064 },
    Orbit { class: 6, a: 0.5124695757009662, b: 0.1251841962027289, v: 0.0003955287790534055 },
    Orbit { class: 6, a: 0.5574711100606224, b: 0.1679107505976331, v: 0.0004015361911302668 },
    Orbit { class: 6, a: 0.5998597333287227, b: 0.2102805057358715, v: 0.0004053836986719548 },
    Orbit { class: 6, a: 0.63950071485166, b: 0.2518418087774107, v: 0.0004073578673299117 },
    Orbit { class: 6, a: 0.5188456224746252, b: 0.04194321676077518, v: 0.0003954628379231406 },
    Orbit { class: 6, a: 0.5664190707942778, b: 0.08457661551921498, v: 0.000401764550884753 },
    Orbit { class: 6, a: 0.6110464353283153, b: 0.1273652932519396, v: 0.0004059030348651293 },
    Orbit { class: 6, a: 0.6526430302051563, b: 0.1698173239076354, v: 0.000408056580948488 },
    Orbit { class: 6, a: 0.6167551880377548, b: 0.04266398851548864, v: 0.0004063018753664651 },
    Orbit { class: 6, a: 0.6607195418355383, b: 0.0855192581423835, v: 0.0004087191292799671 },
];

const GEN_3074: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 2.599095953754734e-05 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.0003603134089687541 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0003586067974412447 },
    Orbit { class: 4, a: 0.01886108518723392, b: 0.0, v: 9.83152847438588e-05 },
    Orbit { class: 4, a: 0.04800217244625303, b: 0.0, v: 0.000160502310795445 },
    Orbit { class: 4, a: 0.08244922058397242, b: 0.0, v: 0.0002072200131464099 },
    Orbit { class: 4, a: 0.1200408362484023, b: 0.0, v: 0.0002431297618814187 },
    Orbit { class: 4, a: 0.1595773530809965, b: 0.0, v: 0.0002711819064496707 },
    Orbit { class: 4, a: 0.2002635973434064, b: 0.0, v: 0.0002932762038321116 },
    Orbit { class: 4, a: 0.2415127590139982, b: 0.0, v: 0.0003107032514197368 },
    Orbit { class: 4, a: 0.2828584158458477, b: 0.0, v: 0.0003243808058921213 },
    Orbit { class: 4, a: 0.3239091015338138, b: 0.0, v: 0.000334989909137403 },
    Orbit { class: 4, a: 0.3643225097962194, b: 0.0, v: 0.0003430580688505218 },
    Orbit { class: 4, a: 0.4037897083691802, b: 0.0, v: 0.0003490124109290343 },
    Orbit { class: 4, a: 0.4420247515194127, b: 0.0, v: 0.0003532148948561955 },
    Orbit { class: 4, a: 0.4787572538464938, b: 0.0, v: 0.0003559862669062833 },
    Orbit { class: 4, a: 0.5137265251275234, b: 0.0, v: 0.0003576224317551411 },
    Orbit { class: 4, a: 0.546676405665461, b: 0.0, v: 0.0003584050533086076 },
    Orbit { class: 4, a: 0.6054859420813535, b: 0.0, v: 0.0003584903581373224 },
    Orbit { class: 4, a: 0.6308106701764562, b: 0.0, v: 0.0003582991879040586 },
    Orbit { class: 4, a: 0.6530369230179583, b: 0.0, v: 0.0003582371187963125 },
    Orbit { class: 4, a: 0.6718609524611158, b: 0.0, v: 0.000358435363112235 },
    Orbit { class: 4, a: 0.6869676499894013, b: 0.0, v: 0.0003589120166517785 },
    Orbit { class: 4, a: 0.6980467077240748, b: 0.0, v: 0.0003595445704531601 },
    Orbit { class: 4, a: 0.7048241721250522, b: 0.0, v: 0.0003600943557111074 },
    Orbit { class: 5, a: 0.05591105222058232, b: 0.0, v: 0.0001456447096742039 },
    Orbit { class: 5, a: 0.1407384078513916, b: 0.0, v: 0.0002252370188283782 },
    Orbit { class: 5, a: 0.2364035438976309, b: 0.0, v: 0.0002766135443474897 },
    Orbit { class: 5, a: 0.336060273781817, b: 0.0, v: 0.0003110729491500851 },
    Orbit { class: 5, a: 0.4356292630054665, b: 0.0, v: 0.0003342506712303391 },
    Orbit { class: 5, a: 0.5321569415256174, b: 0.0, v: 0.000349198183402686 },
    Orbit { class: 5, a: 0.6232956305040555, b: 0.0, v: 0.0003576003604348932 },
    Orbit { class: 6, a: 0.0946987008683847, b: 0.0277874838730947, v: 0.0001921921305788564 },
    Orbit { class: 6, a: 0.1353170300568141, b: 0.06076569878628364, v: 0.0002301458216495632 },
    Orbit { class: 6, a: 0.1771679481726077, b: 0.0970307276271104, v: 0.0002604248549522893 },
    Orbit { class: 6, a: 0.2197066664231751, b: 0.1354112458524762, v: 0.0002845275425870697 },
    Orbit { class: 6, a: 0.2624783557374927, b: 0.17509964797441, v: 0.000303687089797484 },
    Orbit { class: 6, a: 0.3050969521214442, b: 0.2154896907449802, v: 0.0003188414832298066 },
    Orbit { class: 6, a: 0.3472252637196021, b: 0.2560954625740152, v: 0.0003307046414722089 },
    Orbit { class: 6, a: 0.388561021902636, b: 0.2965070050624096, v: 0.000339833096903136 },
    Orbit { class: 6, a: 0.4288273776062765, b: 0.3363641488734497, v: 0.0003466757899705373 },
    Orbit { class: 6, a: 0.4677662471302948, b: 0.3753400029836788, v: 0.0003516095923230054 },
    Orbit { class: 6, a: 0.505133358955336, b: 0.4131297522144286, v: 0.0003549645184048486 },
    Orbit { class: 6, a: 0.5406942145810492, b: 0.4494423776081795, v: 0.0003570415969441392 },
    Orbit { class: 6, a: 0.5742204122576458, b: 0.4839938958841502, v: 0.0003581251798496118 },
    Orbit { class: 6, a: 0.1865407027225188, b: 0.03259144851070796, v: 0.0002543491329913348 },
    Orbit { class: 6, a: 0.2321186453689432, b: 0.06835679505297343, v: 0.0002786711051330776 },
    Orbit { class: 6, a: 0.2773159142523882, b: 0.1062284864451989, v: 0.0002985552361083679 },
    Orbit { class: 6, a: 0.3219200192237254, b: 0.1454404409323047, v: 0.0003145867929154039 },
    Orbit { class: 6, a: 0.3657032593944029, b: 0.185401828258251, v: 0.0003273290662067609 },
    Orbit { class: 6, a: 0.4084376778363622, b: 0.225629741201475, v: 0.0003372705511943501 },
    Orbit { class: 6, a: 0.4499004945751427, b: 0.2657104425000896, v: 0.000344827443785151 },
    Orbit { class: 6, a: 0.4898758141326335, b: 0.3052755487631557, v: 0.0003503592783048583 },
    Orbit { class: 6, a: 0.5281547442266309, b: 0.3439863920645423, v: 0.0003541854792663162 },
    Orbit { class: 6, a: 0.5645346989813992, b: 0.3815229456121914, v: 0.0003565995517909428 },
    Orbit { class: 6, a: 0.5988181252159848, b: 0.4175752420966734, v: 0.0003578802078302898 },
    Orbit { class: 6, a: 0.2850425424471603, b: 0.03562149509862536, v: 0.0002958644592860982 },
    Orbit { class: 6, a: 0.3324619433027876, b: 0.07330318886871096, v: 0.0003119548129116835 },
    Orbit { class: 6, a: 0.3785848333076282, b: 0.1123226296008472, v: 0.0003250745225005984 },
    Orbit { class: 6, a: 0.4232891028562115, b: 0.1521084193337708, v: 0.0003355153415935208 },
    Orbit { class: 6, a: 0.4664287050829722, b: 0.192184445922361, v: 0.0003435847568549328 },
    Orbit { class: 6, a: 0.5078458493735726, b: 0.2321360989678303, v: 0.0003495786831622488 },
    Orbit { class: 6, a: 0.547377981620418, b: 0.271588648636052, v: 0.0003537767805534621 },
    Orbit { class: 6, a: 0.5848617133811376, b: 0.3101924707571355, v: 0.0003564459815421428 },
    Orbit { class: 6, a: 0.6201348281584887, b: 0.3476121052890973, v: 0.0003578464061225468 },
    Orbit { class: 6, a: 0.3852191185387871, b: 0.03763224880035108, v: 0.0003239748762836212 },
    Orbit { class: 6, a: 0.4325025061073423, b: 0.07659581935637134, v: 0.0003345491784174287 },
    Orbit { class: 6, a: 0.477848622973449, b: 0.11633813060839, v: 0.0003429126177301782 },
    Orbit { class: 6, a: 0.5211663693009, b: 0.1563890598752899, v: 0.0003492420343097421 },
    Orbit { class: 6, a: 0.5623469504853703, b: 0.19633208101492, v: 0.0003537399050235257 },
    Orbit { class: 6, a: 0.6012718188659246, b: 0.2357847407258738, v: 0.0003566209152659172 },
    Orbit { class: 6, a: 0.6378179206390117, b: 0.274384612124406, v: 0.0003581084321919782 },
    Orbit { class: 6, a: 0.4836936460214534, b: 0.03895902610739024, v: 0.0003426522117591512 },
    Orbit { class: 6, a: 0.5293792562683797, b: 0.0787124681931264, v: 0.0003491848770121379 },
    Orbit { class: 6, a: 0.5726281253100033, b: 0.1187963808202981, v: 0.0003539318235231476 },
    Orbit { class: 6, a: 0.6133658776169068, b: 0.1587914708061787, v: 0.0003570231438458694 },
    Orbit { class: 6, a: 0.6515085491865307, b: 0.1983058575227646, v: 0.0003586207335051714 },
    Orbit { class: 6, a: 0.5778692716064976, b: 0.03977209689791542, v: 0.0003541196205164025 },
    Orbit { class: 6, a: 0.6207904288086192, b: 0.07990157592981152, v: 0.0003574296911573953 },
    Orbit { class: 6, a: 0.6608688171046802, b: 0.1199671308754309, v: 0.0003591993279818963 },
    Orbit { class: 6, a: 0.665626308948913, b: 0.04015955957805969, v: 0.0003595855034661997 },
];

const GEN_3470: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 2.04038273082633e-05 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0003178149703889544 },
    Orbit { class: 4, a: 0.01721420832906233, b: 0.0, v: 8.28811512807611e-05 },
    Orbit { class: 4, a: 0.0440887537498177, b: 0.0, v: 0.0001360883192522954 },
    Orbit { class: 4, a: 0.0759468081387868, b: 0.0, v: 0.0001766854454542662 },
    Orbit { class: 4, a: 0.1108335359204799, b: 0.0, v: 0.0002083153161230153 },
    Orbit { class: 4, a: 0.1476517054388567, b: 0.0, v: 0.0002333279544657158 },
    Orbit { class: 4, a: 0.1856731870860615, b: 0.0, v: 0.0002532809539930247 },
    Orbit { class: 4, a: 0.2243634099428821, b: 0.0, v: 0.0002692472184211158 },
    Orbit { class: 4, a: 0.2633006881662727, b: 0.0, v: 0.0002819949946811885 },
    Orbit { class: 4, a: 0.3021340904916283, b: 0.0, v: 0.000292095359397303 },
    Orbit { class: 4, a: 0.3405594048030089, b: 0.0, v: 0.0002999889782948352 },
    Orbit { class: 4, a: 0.3783044434007372, b: 0.0, v: 0.0003060292120496902 },
    Orbit { class: 4, a: 0.415119476740791, b: 0.0, v: 0.0003105109167522192 },
    Orbit { class: 4, a: 0.4507705766443257, b: 0.0, v: 0.0003136902387550312 },
    Orbit { class: 4, a: 0.4850346056573187, b: 0.0, v: 0.0003157984652454632 },
    Orbit { class: 4, a: 0.517695081779247, b: 0.0, v: 0.0003170516518425422 },
    Orbit { class: 4, a: 0.5485384240820989, b: 0.0, v: 0.0003176568425633755 },
    Orbit { class: 4, a: 0.6039117238943308, b: 0.0, v: 0.0003177198411207062 },
    Orbit { class: 4, a: 0.6279956655573113, b: 0.0, v: 0.0003175519492394733 },
    Orbit { class: 4, a: 0.6493636169568952, b: 0.0, v: 0.0003174654952634756 },
    Orbit { class: 4, a: 0.6677644117704504, b: 0.0, v: 0.0003175676415467654 },
    Orbit { class: 4, a: 0.6829368572115624, b: 0.0, v: 0.000317892341783541 },
    Orbit { class: 4, a: 0.6946195818184121, b: 0.0, v: 0.0003183788287531909 },
    Orbit { class: 4, a: 0.7025711542057026, b: 0.0, v: 0.0003188755151918807 },
    Orbit { class: 4, a: 0.7066004767140119, b: 0.0, v: 0.0003191916889313849 },
    Orbit { class: 5, a: 0.05132537689946062, b: 0.0, v: 0.0001231779611744508 },
    Orbit { class: 5, a: 0.1297994661331225, b: 0.0, v: 0.000192466137383988 },
    Orbit { class: 5, a: 0.2188852049401307, b: 0.0, v: 0.0002380881867403424 },
    Orbit { class: 5, a: 0.3123174824903457, b: 0.0, v: 0.0002693100663037885 },
    Orbit { class: 5, a: 0.4064037620738195, b: 0.0, v: 0.0002908673382834366 },
    Orbit { class: 5, a: 0.4984958396944782, b: 0.0, v: 0.0003053914619381535 },
    Orbit { class: 5, a: 0.5864975046021365, b: 0.0, v: 0.0003143916684147777 },
    Orbit { class: 5, a: 0.6686711634580175, b: 0.0, v: 0.0003187042244055363 },
    Orbit { class: 6, a: 0.0871573878083595, b: 0.02557175233367578, v: 0.000163521953586979 },
    Orbit { class: 6, a: 0.1248383123134007, b: 0.05604823383376681, v: 0.000196810991769607 },
    Orbit { class: 6, a: 0.1638062693383378, b: 0.08968568601900764, v: 0.0002236754342249974 },
    Orbit { class: 6, a: 0.2035586203373176, b: 0.1254086651976279, v: 0.0002453186687017181 },
    Orbit { class: 6, a: 0.2436798975293774, b: 0.1624780150162012, v: 0.0002627551791580541 },
    Orbit { class: 6, a: 0.2838207507773806, b: 0.2003422342683208, v: 0.000276765486015222 },
    Orbit { class: 6, a: 0.3236787502217692, b: 0.2385628026255263, v: 0.0002879467027765895 },
    Orbit { class: 6, a: 0.3629849554840691, b: 0.2767731148783578, v: 0.0002967639918918702 },
    Orbit { class: 6, a: 0.4014948081992087, b: 0.3146542308245309, v: 0.0003035900684660351 },
    Orbit { class: 6, a: 0.4389818379260225, b: 0.3519196415895088, v: 0.0003087338237298308 },
    Orbit { class: 6, a: 0.4752331143674377, b: 0.3883050984023654, v: 0.0003124608838860167 },
    Orbit { class: 6, a: 0.5100457318374018, b: 0.4235613423908649, v: 0.0003150084294226743 },
    Orbit { class: 6, a: 0.5432238388954868, b: 0.457448471719622, v: 0.0003165958398598402 },
    Orbit { class: 6, a: 0.5745758685072442, b: 0.4897311639255524, v: 0.0003174320440957372 },
    Orbit { class: 6, a: 0.1723981437592809, b: 0.03010630597881105, v: 0.0002182188909812599 },
    Orbit { class: 6, a: 0.2149553257844597, b: 0.06326031554204695, v: 0.0002399727933921445 },
    Orbit { class: 6, a: 0.2573256081247422, b: 0.09848566980258631, v: 0.0002579796133514652 },
    Orbit { class: 6, a: 0.2993163751238106, b: 0.1350835952384266, v: 0.0002727114052623535 },
    Orbit { class: 6, a: 0.3407238005148, b: 0.1725184055442181, v: 0.0002846327656281355 },
    Orbit { class: 6, a: 0.3813454978483264, b: 0.2103559279730725, v: 0.0002941491102051334 },
    Orbit { class: 6, a: 0.4209848104423343, b: 0.248227877455486, v: 0.0003016049492136107 },
    Orbit { class: 6, a: 0.45945196999963, b: 0.2858099509982883, v: 0.0003072949726175648 },
    Orbit { class: 6, a: 0.496564016618593, b: 0.3228075659915428, v: 0.000311476814288646 },
    Orbit { class: 6, a: 0.5321441655571562, b: 0.3589459907204151, v: 0.0003143823673666223 },
    Orbit { class: 6, a: 0.5660208438582166, b: 0.393963008886431, v: 0.0003162269764661535 },
    Orbit { class: 6, a: 0.5980264315964364, b: 0.4276029922949089, v: 0.0003172164663759821 },
    Orbit { class: 6, a: 0.2644215852350733, b: 0.03300939429072552, v: 0.0002554575398967435 },
    Orbit { class: 6, a: 0.3090113743443063, b: 0.06803887650078501, v: 0.0002701704069135677 },
    Orbit { class: 6, a: 0.3525871079197808, b: 0.1044326136206709, v: 0.000282369341346894 },
    Orbit { class: 6, a: 0.3950418005354029, b: 0.1416751597517679, v: 0.0002922898463214289 },
    Orbit { class: 6, a: 0.4362475663430163, b: 0.1793408610504821, v: 0.0003001829062162428 },
    Orbit { class: 6, a: 0.4760661812145854, b: 0.2170630750175722, v: 0.0003062890864542953 },
    Orbit { class: 6, a: 0.5143551042512103, b: 0.2545145157815807, v: 0.0003108328279264746 },
    Orbit { class: 6, a: 0.5509709026935597, b: 0.2913940101706601, v: 0.0003140243146201245 },
    Orbit { class: 6, a: 0.5857711030329428, b: 0.3274169910910705, v: 0.000316063803097713 },
    Orbit { class: 6, a: 0.6186149917404392, b: 0.3623081329317265, v: 0.0003171462882206275 },
    Orbit { class: 6, a: 0.3586894569557064, b: 0.0349735438645004, v: 0.0002812388416031796 },
    Orbit { class: 6, a: 0.4035266610019441, b: 0.07129736739757095, v: 0.0002912137500288045 },
    Orbit { class: 6, a: 0.446777531233251, b: 0.1084758620193165, v: 0.0002993241256502206 },
    Orbit { class: 6, a: 0.4883638346608543, b: 0.1460915689241772, v: 0.0003057101738983822 },
    Orbit { class: 6, a: 0.5281908348434601, b: 0.183779083236998, v: 0.0003105319326251432 },
    Orbit { class: 6, a: 0.5661542687149311, b: 0.2212075390874021, v: 0.0003139565514428167 },
    Orbit { class: 6, a: 0.6021450102031451, b: 0.2580682841160985, v: 0.0003161543006806366 },
    Orbit { class: 6, a: 0.636052078361005, b: 0.2940656362094121, v: 0.0003172985960613294 },
    Orbit { class: 6, a: 0.4521611065087196, b: 0.03631055365867002, v: 0.0002989400336901431 },
    Orbit { class: 6, a: 0.4959365651560963, b: 0.0734831846848435, v: 0.0003054555883947677 },
    Orbit { class: 6, a: 0.5376815804038283, b: 0.1111087643812648, v: 0.0003104764960807702 },
    Orbit { class: 6, a: 0.5773314480243767, b: 0.1488226085145408, v: 0.0003141015825977616 },
    Orbit { class: 6, a: 0.6148113245575056, b: 0.1862892274135151, v: 0.0003164520621159896 },
    Orbit { class: 6, a: 0.650040746284238, b: 0.2231909701714456, v: 0.0003176652305912204 },
    Orbit { class: 6, a: 0.5425151448707213, b: 0.03718201306118944, v: 0.0003105097161023939 },
    Orbit { class: 6, a: 0.5841860556907931, b: 0.07483616335067346, v: 0.000314301411789055 },
    Orbit { class: 6, a: 0.62346321868515, b: 0.112599083426612, v: 0.00031681728662872 },
    Orbit { class: 6, a: 0.6602934551848842, b: 0.1501303813157619, v: 0.0003181401865570968 },
    Orbit { class: 6, a: 0.6278573968375105, b: 0.0376755993024572, v: 0.0003170663659156037 },
    Orbit { class: 6, a: 0.6665611711264577, b: 0.07548443301360158, v: 0.000318544794462551 },
];

const GEN_3890: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 1.80739525219692e-05 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.0002848008782238827 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0002836065837530581 },
    Orbit { class: 4, a: 0.01587876419858352, b: 0.0, v: 7.013149266673816e-05 },
    Orbit { class: 4, a: 0.04069193593751206, b: 0.0, v: 0.0001162798021956766 },
    Orbit { class: 4, a: 0.07025888115257997, b: 0.0, v: 0.0001518728583972105 },
    Orbit { class: 4, a: 0.1027495450028704, b: 0.0, v: 0.0001798796108216934 },
    Orbit { class: 4, a: 0.1371457730893426, b: 0.0, v: 0.0002022593385972785 },
    Orbit { class: 4, a: 0.1727758532671953, b: 0.0, v: 0.0002203093105575464 },
    Orbit { class: 4, a: 0.2091492038929037, b: 0.0, v: 0.0002349294234299855 },
    Orbit { class: 4, a: 0.2458813281751915, b: 0.0, v: 0.0002467682058747003 },
    Orbit { class: 4, a: 0.2826545859450066, b: 0.0, v: 0.0002563092683572224 },
    Orbit { class: 4, a: 0.3191957291799622, b: 0.0, v: 0.0002639253896763318 },
    Orbit { class: 4, a: 0.3552621469299578, b: 0.0, v: 0.0002699137479265108 },
    Orbit { class: 4, a: 0.390632950340623, b: 0.0, v: 0.0002745196420166739 },
    Orbit { class: 4, a: 0.4251028614093031, b: 0.0, v: 0.0002779529197397593 },
    Orbit { class: 4, a: 0.458477752011187, b: 0.0, v: 0.0002803996086684265 },
    Orbit { class: 4, a: 0.4905711358710193, b: 0.0, v: 0.0002820302356715842 },
    Orbit { class: 4, a: 0.5212011669847385, b: 0.0, v: 0.0002830056747491068 },
    Orbit { class: 4, a: 0.5501878488737995, b: 0.0, v: 0.0002834808950776839 },
    Orbit { class: 4, a: 0.6025037877479342, b: 0.0, v: 0.0002835282339078929 },
    Orbit { class: 4, a: 0.6254572689549016, b: 0.0, v: 0.00028338192670658 },
    Orbit { class: 4, a: 0.6460107179528248, b: 0.0, v: 0.0002832858336906784 },
    Orbit { class: 4, a: 0.6639541138154251, b: 0.0, v: 0.0002833268235451244 },
    Orbit { class: 4, a: 0.6790688515667495, b: 0.0, v: 0.0002835432677029253 },
    Orbit { class: 4, a: 0.6911338580371512, b: 0.0, v: 0.0002839091722743049 },
    Orbit { class: 4, a: 0.699938595612649, b: 0.0, v: 0.0002843308178875841 },
    Orbit { class: 4, a: 0.7053037748656896, b: 0.0, v: 0.0002846703550533846 },
    Orbit { class: 5, a: 0.04732224387180115, b: 0.0, v: 0.00010511934069719 },
    Orbit { class: 5, a: 0.1202100529326803, b: 0.0, v: 0.0001657871838796974 },
    Orbit { class: 5, a: 0.2034304820664855, b: 0.0, v: 0.0002064648113714232 },
    Orbit { class: 5, a: 0.2912285643573002, b: 0.0, v: 0.0002347942745819741 },
    Orbit { class: 5, a: 0.3802361792726768, b: 0.0, v: 0.0002547775326597726 },
    Orbit { class: 5, a: 0.4680598511056146, b: 0.0, v: 0.0002686876684847025 },
    Orbit { class: 5, a: 0.5528151052155599, b: 0.0, v: 0.0002778665755515867 },
    Orbit { class: 5, a: 0.6329386307803041, b: 0.0, v: 0.0002830996616782929 },
    Orbit { class: 6, a: 0.0805651665136907, b: 0.02363454684003124, v: 0.0001403063340168372 },
    Orbit { class: 6, a: 0.1156476077139389, b: 0.05191291632545936, v: 0.0001696504125939477 },
    Orbit { class: 6, a: 0.1520473382760421, b: 0.0832271573699452, v: 0.000193578724274539 },
    Orbit { class: 6, a: 0.1892986699745931, b: 0.1165855667993712, v: 0.0002130614510521968 },
    Orbit { class: 6, a: 0.2270194446777792, b: 0.1513077167409504, v: 0.0002289381265931048 },
    Orbit { class: 6, a: 0.2648908185093273, b: 0.1868882025807859, v: 0.0002418630292816186 },
    Orbit { class: 6, a: 0.3026389259574136, b: 0.2229277629776224, v: 0.0002523400495631193 },
    Orbit { class: 6, a: 0.3400220296151384, b: 0.2590951840746235, v: 0.0002607623973449605 },
    Orbit { class: 6, a: 0.376821795333551, b: 0.2951047291750847, v: 0.0002674441032689209 },
    Orbit { class: 6, a: 0.4128372900921884, b: 0.330701971416993, v: 0.0002726432360343356 },
    Orbit { class: 6, a: 0.447880713181563, b: 0.3656544101087634, v: 0.0002765787685924545 },
    Orbit { class: 6, a: 0.4817742034089257, b: 0.3997448951939695, v: 0.0002794428690642224 },
    Orbit { class: 6, a: 0.5143472814653344, b: 0.4327667110812024, v: 0.0002814099002062895 },
    Orbit { class: 6, a: 0.545434621390565, b: 0.4645196123532293, v: 0.0002826429531578994 },
    Orbit { class: 6, a: 0.5748739313170252, b: 0.4948063555703345, v: 0.0002832983542550884 },
    Orbit { class: 6, a: 0.1599598738286342, b: 0.02792357590048985, v: 0.0001886695565284976 },
    Orbit { class: 6, a: 0.1998097412500951, b: 0.05877141038139065, v: 0.0002081867882748234 },
    Orbit { class: 6, a: 0.2396228952566202, b: 0.09164573914691378, v: 0.0002245148680600796 },
    Orbit { class: 6, a: 0.2792228341097746, b: 0.1259049641962687, v: 0.0002380370491511872 },
    Orbit { class: 6, a: 0.3184251107546741, b: 0.1610594823400863, v: 0.0002491398041852455 },
    Orbit { class: 6, a: 0.3570481164426244, b: 0.1967151653460898, v: 0.000258163240588123 },
    Orbit { class: 6, a: 0.3949164710492144, b: 0.2325404606175168, v: 0.0002653965506227417 },
    Orbit { class: 6, a: 0.4318617293970503, b: 0.2682461141151439, v: 0.0002710857216747087 },
    Orbit { class: 6, a: 0.4677221009931678, b: 0.3035720116011973, v: 0.0002754434093903659 },
    Orbit { class: 6, a: 0.5023417939270955, b: 0.3382781859197439, v: 0.000278657993251938 },
    Orbit { class: 6, a: 0.5355701836636128, b: 0.3721383065625942, v: 0.0002809011080679474 },
    Orbit { class: 6, a: 0.5672608451328771, b: 0.4049346360466055, v: 0.0002823336184560987 },
    Orbit { class: 6, a: 0.5972704202540162, b: 0.4364538098633802, v: 0.0002831101175806309 },
    Orbit { class: 6, a: 0.2461687022333596, b: 0.03070423166833368, v: 0.0002221679970354546 },
    Orbit { class: 6, a: 0.2881774566286831, b: 0.06338034669281885, v: 0.0002356185734270703 },
    Orbit { class: 6, a: 0.3293963604116978, b: 0.09742862487067941, v: 0.000246922834480559 },
    Orbit { class: 6, a: 0.3697303822241377, b: 0.132379953228229, v: 0.0002562726348642046 },
    Orbit { class: 6, a: 0.4090663023135127, b: 0.1678497018129336, v: 0.0002638756726753028 },
    Orbit { class: 6, a: 0.4472819355411712, b: 0.2035095105326114, v: 0.0002699311157390862 },
    Orbit { class: 6, a: 0.4842513377231437, b: 0.2390692566672091, v: 0.0002746233268403837 },
    Orbit { class: 6, a: 0.5198477629962928, b: 0.2742649818076149, v: 0.0002781225674454771 },
    Orbit { class: 6, a: 0.5539453011883145, b: 0.3088503806580094, v: 0.0002805881254045684 },
    Orbit { class: 6, a: 0.5864196762401251, b: 0.3425904245906614, v: 0.0002821719877004913 },
    Orbit { class: 6, a: 0.617148446666839, b: 0.3752562294789468, v: 0.0002830222502333124 },
    Orbit { class: 6, a: 0.3350337830565727, b: 0.03261589934634747, v: 0.000245799595674487 },
    Orbit { class: 6, a: 0.3775773224758284, b: 0.06658438928081573, v: 0.0002551474407503706 },
    Orbit { class: 6, a: 0.4188155229848973, b: 0.1014565797157954, v: 0.0002629065335195311 },
    Orbit { class: 6, a: 0.4586805892009344, b: 0.1368573320843822, v: 0.0002691900449925075 },
    Orbit { class: 6, a: 0.4970895714224235, b: 0.1724614851951608, v: 0.0002741275485754276 },
    Orbit { class: 6, a: 0.5339505133960747, b: 0.2079779381416412, v: 0.0002778530970122595 },
    Orbit { class: 6, a: 0.569166579253144, b: 0.2431385788322288, v: 0.0002805010567646741 },
    Orbit { class: 6, a: 0.6026387682680377, b: 0.2776901883049853, v: 0.000282205583403104 },
    Orbit { class: 6, a: 0.6342676150163307, b: 0.3113881356386632, v: 0.0002831016901243473 },
    Orbit { class: 6, a: 0.4237951119537067, b: 0.03394877848664351, v: 0.0002624474901131803 },
    Orbit { class: 6, a: 0.4656918683234929, b: 0.06880219556291448, v: 0.0002688034163039377 },
    Orbit { class: 6, a: 0.505885706918598, b: 0.1041946859721635, v: 0.0002738932751287636 },
    Orbit { class: 6, a: 0.5443204666713995, b: 0.1398039738736393, v: 0.0002777944791242523 },
    Orbit { class: 6, a: 0.5809298813759742, b: 0.1753373381196155, v: 0.0002806011661660987 },
    Orbit { class: 6, a: 0.6156416039447128, b: 0.210521579351401, v: 0.000282418145659746 },
    Orbit { class: 6, a: 0.6483801351066604, b: 0.2450953312157051, v: 0.0002833585216577828 },
    Orbit { class: 6, a: 0.5103616577251688, b: 0.03485560643800719, v: 0.0002738165236962878 },
    Orbit { class: 6, a: 0.5506738792580681, b: 0.07026308631512033, v: 0.000277836520820318 },
    Orbit { class: 6, a: 0.5889573040995292, b: 0.1059035061296403, v: 0.0002807852940418966 },
    Orbit { class: 6, a: 0.625164158951693, b: 0.1414823925236026, v: 0.0002827245949674705 },
    Orbit { class: 6, a: 0.6592414921570178, b: 0.176720790821453, v: 0.0002837342344829828 },
    Orbit { class: 6, a: 0.5930314017533383, b: 0.03542189339561672, v: 0.0002809233907610981 },
    Orbit { class: 6, a: 0.6309812253390175, b: 0.07109574040369548, v: 0.0002829930809742694 },
    Orbit { class: 6, a: 0.666629601135323, b: 0.106725979228273, v: 0.0002841097874111479 },
    Orbit { class: 6, a: 0.6703715271049921, b: 0.03569455268820809, v: 0.0002843455206008783 },
];

const GEN_4334: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 1.449063022537883e-05 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0002546377329828424 },
    Orbit { class: 4, a: 0.01462896151831013, b: 0.0, v: 6.018432961087496e-05 },
    Orbit { class: 4, a: 0.03769840812493139, b: 0.0, v: 0.0001002286583263673 },
    Orbit { class: 4, a: 0.06524701904096891, b: 0.0, v: 0.0001315222931028093 },
    Orbit { class: 4, a: 0.09560543416134648, b: 0.0, v: 0.0001564213746876724 },
    Orbit { class: 4, a: 0.1278335898929198, b: 0.0, v: 0.0001765118841507736 },
    Orbit { class: 4, a: 0.1613096104466031, b: 0.0, v: 0.000192873709931108 },
    Orbit { class: 4, a: 0.1955806225745371, b: 0.0, v: 0.000206265853426327 },
    Orbit { class: 4, a: 0.2302935218498028, b: 0.0, v: 0.0002172395445953787 },
    Orbit { class: 4, a: 0.2651584344113027, b: 0.0, v: 0.0002262076188876047 },
    Orbit { class: 4, a: 0.2999276825183209, b: 0.0, v: 0.0002334885699462397 },
    Orbit { class: 4, a: 0.3343828669718798, b: 0.0, v: 0.0002393355273179203 },
    Orbit { class: 4, a: 0.3683265013750518, b: 0.0, v: 0.0002439559200468863 },
    Orbit { class: 4, a: 0.4015763206518108, b: 0.0, v: 0.0002475251866060002 },
    Orbit { class: 4, a: 0.433961202639977, b: 0.0, v: 0.0002501965558158773 },
    Orbit { class: 4, a: 0.4653180651114582, b: 0.0, v: 0.0002521081407925925 },
    Orbit { class: 4, a: 0.4954893331080803, b: 0.0, v: 0.0002533881002388081 },
    Orbit { class: 4, a: 0.524320706892493, b: 0.0, v: 0.0002541582900848261 },
    Orbit { class: 4, a: 0.5516590479041704, b: 0.0, v: 0.000254536573752586 },
    Orbit { class: 4, a: 0.6012371927804177, b: 0.0, v: 0.0002545726993066799 },
    Orbit { class: 4, a: 0.6231574466449818, b: 0.0, v: 0.0002544456197465555 },
    Orbit { class: 4, a: 0.6429416514181271, b: 0.0, v: 0.0002543481596881064 },
    Orbit { class: 4, a: 0.6604124272943594, b: 0.0, v: 0.0002543506451429194 },
    Orbit { class: 4, a: 0.675385147040825, b: 0.0, v: 0.0002544905675493763 },
    Orbit { class: 4, a: 0.687671797062616, b: 0.0, v: 0.0002547611407344429 },
    Orbit { class: 4, a: 0.6970895061319234, b: 0.0, v: 0.0002551060375448869 },
    Orbit { class: 4, a: 0.703474691255331, b: 0.0, v: 0.0002554291933816039 },
    Orbit { class: 4, a: 0.7067017217542295, b: 0.0, v: 0.0002556255710686343 },
    Orbit { class: 5, a: 0.04382223501131123, b: 0.0, v: 9.041339695118196e-05 },
    Orbit { class: 5, a: 0.1117474077400006, b: 0.0, v: 0.0001438426330079022 },
    Orbit { class: 5, a: 0.189715325291144, b: 0.0, v: 0.0001802523089820518 },
    Orbit { class: 5, a: 0.2724023009910331, b: 0.0, v: 0.0002060052290565496 },
    Orbit { class: 5, a: 0.3567163308709902, b: 0.0, v: 0.0002245002248967466 },
    Orbit { class: 5, a: 0.4404784483028087, b: 0.0, v: 0.000237705984773115 },
    Orbit { class: 5, a: 0.5219833154161411, b: 0.0, v: 0.0002468118955882525 },
    Orbit { class: 5, a: 0.5998179868977553, b: 0.0, v: 0.0002525410872966528 },
    Orbit { class: 5, a: 0.6727803154548222, b: 0.0, v: 0.0002553101409933397 },
    Orbit { class: 6, a: 0.07476563943166085, b: 0.02193168509461185, v: 0.0001212879733668632 },
    Orbit { class: 6, a: 0.1075341482001416, b: 0.04826419281533887, v: 0.0001472872881270931 },
    Orbit { class: 6, a: 0.1416344885203259, b: 0.07751191883575742, v: 0.0001686846601010828 },
    Orbit { class: 6, a: 0.1766325315388586, b: 0.108755813924768, v: 0.0001862698414660208 },
    Orbit { class: 6, a: 0.2121744174481514, b: 0.1413661374253096, v: 0.0002007430956991861 },
    Orbit { class: 6, a: 0.2479669443408145, b: 0.174876821425888, v: 0.0002126568125394796 },
    Orbit { class: 6, a: 0.2837600452294113, b: 0.2089216406612073, v: 0.0002224394603372113 },
    Orbit { class: 6, a: 0.3193344933193984, b: 0.2431987685545972, v: 0.0002304264522673135 },
    Orbit { class: 6, a: 0.3544935442438745, b: 0.277449705437777, v: 0.0002368854288424087 },
    Orbit { class: 6, a: 0.3890571932288154, b: 0.3114460356156915, v: 0.0002420352089461772 },
    Orbit { class: 6, a: 0.422858121425909, b: 0.3449806851913012, v: 0.0002460597113081295 },
    Orbit { class: 6, a: 0.4557387211304052, b: 0.3778618641248256, v: 0.0002491181912257687 },
    Orbit { class: 6, a: 0.4875487950541643, b: 0.4099086391698978, v: 0.0002513528194205857 },
    Orbit { class: 6, a: 0.5181436529962997, b: 0.4409474925853973, v: 0.000252894309669322 },
    Orbit { class: 6, a: 0.5473824095600661, b: 0.4708094517711291, v: 0.0002538660368488136 },
    Orbit { class: 6, a: 0.5751263398976174, b: 0.4993275140354637, v: 0.0002543868648299022 },
    Orbit { class: 6, a: 0.1489515746840028, b: 0.02599381993267017, v: 0.0001642595537825183 },
    Orbit { class: 6, a: 0.1863656444351767, b: 0.0547928653246219, v: 0.0001818246659849308 },
    Orbit { class: 6, a: 0.2238602880356348, b: 0.08556763251425253, v: 0.000196656564949242 },
    Orbit { class: 6, a: 0.261272337572816, b: 0.1177257802267011, v: 0.0002090677905657991 },
    Orbit { class: 6, a: 0.298433299020619, b: 0.15081684561927, v: 0.0002193820409510504 },
    Orbit { class: 6, a: 0.3351786584663333, b: 0.1844801892177727, v: 0.0002278870827661928 },
    Orbit { class: 6, a: 0.371350552220912, b: 0.2184145236087598, v: 0.000234828319228209 },
    Orbit { class: 6, a: 0.4067981098954663, b: 0.2523590641486229, v: 0.0002404139755581477 },
    Orbit { class: 6, a: 0.4413769993687534, b: 0.2860812976901373, v: 0.0002448227407760734 },
    Orbit { class: 6, a: 0.4749487182516394, b: 0.3193686757808996, v: 0.0002482110455592573 },
    Orbit { class: 6, a: 0.5073798105075426, b: 0.3520226949547602, v: 0.0002507192397774103 },
    Orbit { class: 6, a: 0.5385410448878654, b: 0.383854439566789, v: 0.000252476596853488 },
    Orbit { class: 6, a: 0.568306535367053, b: 0.4146810037640963, v: 0.0002536052388539425 },
    Orbit { class: 6, a: 0.596552762066351, b: 0.4443224094681121, v: 0.0002542230588033068 },
    Orbit { class: 6, a: 0.2299227700856157, b: 0.02865757664057584, v: 0.0001944817013047896 },
    Orbit { class: 6, a: 0.2695752998553267, b: 0.05923421684485993, v: 0.0002067862362746635 },
    Orbit { class: 6, a: 0.3086178716611389, b: 0.09117817776057716, v: 0.0002172440734649114 },
    Orbit { class: 6, a: 0.3469649871659077, b: 0.1240593814082605, v: 0.0002260125991723423 },
    Orbit { class: 6, a: 0.3845153566319655, b: 0.1575272058259175, v: 0.0002332655008689523 },
    Orbit { class: 6, a: 0.4211600033403215, b: 0.1912845163525413, v: 0.0002391699681532458 },
    Orbit { class: 6, a: 0.4567867834329882, b: 0.2250710177858171, v: 0.0002438801528273928 },
    Orbit { class: 6, a: 0.4912829319232061, b: 0.258652130344091, v: 0.0002475370504260665 },
    Orbit { class: 6, a: 0.5245364793303812, b: 0.2918112242865407, v: 0.0002502707235640574 },
    Orbit { class: 6, a: 0.5564369788915756, b: 0.324343923906789, v: 0.0002522031701054241 },
    Orbit { class: 6, a: 0.5868757697775288, b: 0.3560536787835351, v: 0.0002534511269978784 },
    Orbit { class: 6, a: 0.6157458853519617, b: 0.3867480821242581, v: 0.0002541284914955151 },
    Orbit { class: 6, a: 0.3138461110672113, b: 0.03051374637507278, v: 0.0002161509250688394 },
    Orbit { class: 6, a: 0.3542495872050569, b: 0.06237111233730755, v: 0.0002248778513437852 },
    Orbit { class: 6, a: 0.3935751553120181, b: 0.09516223952401907, v: 0.0002322388803404617 },
    Orbit { class: 6, a: 0.4317634668111147, b: 0.1285467341508517, v: 0.0002383265471001355 },
    Orbit { class: 6, a: 0.4687413842250821, b: 0.1622318931656033, v: 0.0002432476675019525 },
    Orbit { class: 6, a: 0.5044274237060283, b: 0.1959581153836453, v: 0.0002471122223750674 },
    Orbit { class: 6, a: 0.5387354077925727, b: 0.2294888081183837, v: 0.000250029175248687 },
    Orbit { class: 6, a: 0.5715768898356105, b: 0.2626031152713945, v: 0.0002521055942764682 },
    Orbit { class: 6, a: 0.6028627200136111, b: 0.2950904075286713, v: 0.0002534472785575503 },
    Orbit { class: 6, a: 0.6325039812653463, b: 0.3267458451113286, v: 0.0002541599713080121 },
    Orbit { class: 6, a: 0.3981986708423407, b: 0.03183291458749821, v: 0.0002317380975862936 },
    Orbit { class: 6, a: 0.43827911821333, b: 0.06459548193880908, v: 0.0002378550733719775 },
    Orbit { class: 6, a: 0.4769233057218166, b: 0.09795757037087952, v: 0.0002428884456739118 },
    Orbit { class: 6, a: 0.5140823911194238, b: 0.1316307235126655, v: 0.0002469002655757292 },
    Orbit { class: 6, a: 0.5496977833862983, b: 0.1653556486358704, v: 0.0002499657574265851 },
    Orbit { class: 6, a: 0.5837047306512727, b: 0.198893172412651, v: 0.0002521676168486082 },
    Orbit { class: 6, a: 0.6160349566926879, b: 0.232017458143895, v: 0.0002535935662645334 },
    Orbit { class: 6, a: 0.646618535320944, b: 0.2645106562168662, v: 0.0002543356743363214 },
    Orbit { class: 6, a: 0.4810835158795404, b: 0.03275917807743992, v: 0.0002427353285201535 },
    Orbit { class: 6, a: 0.5199925041324341, b: 0.06612546183967181, v: 0.0002468258039744386 },
    Orbit { class: 6, a: 0.5571717692207494, b: 0.09981498331474142, v: 0.000250006095644031 },
    Orbit { class: 6, a: 0.5925789250836379, b: 0.1335687001410374, v: 0.0002523238365420979 },
    Orbit { class: 6, a: 0.626165852385967, b: 0.1671444402896463, v: 0.0002538399260252846 },
    Orbit { class: 6, a: 0.657881112666933, b: 0.2003106382156076, v: 0.0002546255927268069 },
    Orbit { class: 6, a: 0.56096246129981, b: 0.03337500940231335, v: 0.0002500583360048449 },
    Orbit { class: 6, a: 0.597995965998467, b: 0.06708750335901803, v: 0.0002524777638260203 },
    Orbit { class: 6, a: 0.6330523711054002, b: 0.100879212642485, v: 0.0002540951193860656 },
    Orbit { class: 6, a: 0.6660960998103972, b: 0.1345050343171794, v: 0.0002549524085027472 },
    Orbit { class: 6, a: 0.6365384364585819, b: 0.03372799460737052, v: 0.0002542569507009158 },
    Orbit { class: 6, a: 0.6710994302899275, b: 0.06755249309678028, v: 0.0002552114127580376 },
];

const GEN_4802: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 9.687521879420705e-05 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.0002307897895367918 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0002297310852498558 },
    Orbit { class: 4, a: 0.02335728608887064, b: 0.0, v: 7.386265944001918e-05 },
    Orbit { class: 4, a: 0.04352987836550653, b: 0.0, v: 8.25797769854221e-05 },
    Orbit { class: 4, a: 0.064392005210888, b: 0.0, v: 9.70604476205763e-05 },
    Orbit { class: 4, a: 0.0900394363199318, b: 0.0, v: 0.0001302393847117003 },
    Orbit { class: 4, a: 0.1196706615548473, b: 0.0, v: 0.0001541957004600968 },
    Orbit { class: 4, a: 0.1511715412838134, b: 0.0, v: 0.0001704459770092199 },
    Orbit { class: 4, a: 0.1835982828503801, b: 0.0, v: 0.0001827374890942906 },
    Orbit { class: 4, a: 0.2165081259155405, b: 0.0, v: 0.0001926360817436107 },
    Orbit { class: 4, a: 0.2496208720417563, b: 0.0, v: 0.0002008010239494833 },
    Orbit { class: 4, a: 0.28272006735679, b: 0.0, v: 0.0002075635983209175 },
    Orbit { class: 4, a: 0.3156190823994346, b: 0.0, v: 0.0002131306638690909 },
    Orbit { class: 4, a: 0.3481476793749115, b: 0.0, v: 0.0002176562329937335 },
    Orbit { class: 4, a: 0.3801466086947226, b: 0.0, v: 0.0002212682262991018 },
    Orbit { class: 4, a: 0.4114652119634011, b: 0.0, v: 0.0002240799515668565 },
    Orbit { class: 4, a: 0.4419598786519751, b: 0.0, v: 0.0002261959816187525 },
    Orbit { class: 4, a: 0.4714925949329543, b: 0.0, v: 0.0002277156368808855 },
    Orbit { class: 4, a: 0.4999293972879466, b: 0.0, v: 0.0002287351772128336 },
    Orbit { class: 4, a: 0.5271387221431248, b: 0.0, v: 0.0002293490814084085 },
    Orbit { class: 4, a: 0.5529896780837761, b: 0.0, v: 0.0002296505312376273 },
    Orbit { class: 4, a: 0.6000856099481712, b: 0.0, v: 0.0002296793832318756 },
    Orbit { class: 4, a: 0.6210562192785175, b: 0.0, v: 0.0002295785443842974 },
    Orbit { class: 4, a: 0.640116587993424, b: 0.0, v: 0.0002295017931529102 },
    Orbit { class: 4, a: 0.6571144029244333, b: 0.0, v: 0.0002295059638184868 },
    Orbit { class: 4, a: 0.6718910821718863, b: 0.0, v: 0.0002296232343237362 },
    Orbit { class: 4, a: 0.684284559109901, b: 0.0, v: 0.0002298530178740771 },
    Orbit { class: 4, a: 0.6941353476269816, b: 0.0, v: 0.0002301579790280501 },
    Orbit { class: 4, a: 0.7012965242212991, b: 0.0, v: 0.0002304690404996513 },
    Orbit { class: 4, a: 0.7056471428242644, b: 0.0, v: 0.0002307027995907102 },
    Orbit { class: 5, a: 0.04595557643585895, b: 0.0, v: 9.312274696671092e-05 },
    Orbit { class: 5, a: 0.1049316742435023, b: 0.0, v: 0.0001199919385876926 },
    Orbit { class: 5, a: 0.1773548879549274, b: 0.0, v: 0.000159803913887769 },
    Orbit { class: 5, a: 0.2559071411236127, b: 0.0, v: 0.00018222537635749 },
    Orbit { class: 5, a: 0.3358156837985898, b: 0.0, v: 0.000198857959365504 },
    Orbit { class: 5, a: 0.4155835743763893, b: 0.0, v: 0.0002112620102533307 },
    Orbit { class: 5, a: 0.4937894296167472, b: 0.0, v: 0.0002201594887699007 },
    Orbit { class: 5, a: 0.5691569694793316, b: 0.0, v: 0.0002261622590895036 },
    Orbit { class: 5, a: 0.6405840854894251, b: 0.0, v: 0.0002296458453435705 },
    Orbit { class: 6, a: 0.07345133894143348, b: 0.02177844081486067, v: 0.0001006006990267 },
    Orbit { class: 6, a: 0.1009859834044931, b: 0.04590362185775188, v: 0.0001227676689635876 },
    Orbit { class: 6, a: 0.1324289619748758, b: 0.07255063095690877, v: 0.0001467864280270117 },
    Orbit { class: 6, a: 0.1654272109607127, b: 0.1017825451960684, v: 0.0001644178912101232 },
    Orbit { class: 6, a: 0.1990767186776461, b: 0.1325652320980364, v: 0.0001777664890718961 },
    Orbit { class: 6, a: 0.2330125945523278, b: 0.1642765374496765, v: 0.000188482566451669 },
    Orbit { class: 6, a: 0.2670080611108287, b: 0.1965360374337889, v: 0.0001973269246453848 },
    Orbit { class: 6, a: 0.3008753376294316, b: 0.2290726770542238, v: 0.0002046767775855328 },
    Orbit { class: 6, a: 0.334447559616786, b: 0.2616645495370823, v: 0.000210760012591804 },
    Orbit { class: 6, a: 0.3675709724070786, b: 0.2941150728843141, v: 0.0002157416362266829 },
    Orbit { class: 6, a: 0.4001000887587812, b: 0.3262440400919066, v: 0.0002197557816920721 },
    Orbit { class: 6, a: 0.4318956350436028, b: 0.3578835350611916, v: 0.0002229192611835437 },
    Orbit { class: 6, a: 0.4628239056795531, b: 0.3888751854043678, v: 0.0002253385110212775 },
    Orbit { class: 6, a: 0.4927563229773636, b: 0.419067800322284, v: 0.0002271137107548774 },
    Orbit { class: 6, a: 0.5215687136707969, b: 0.4483151836883852, v: 0.0002283414092917525 },
    Orbit { class: 6, a: 0.5491402346984905, b: 0.476474067608788, v: 0.0002291161673130077 },
    Orbit { class: 6, a: 0.5753520160126075, b: 0.5034021310998277, v: 0.0002295313908576598 },
    Orbit { class: 6, a: 0.1388326356417754, b: 0.02435436510372806, v: 0.0001438204721359031 },
    Orbit { class: 6, a: 0.1743686900537244, b: 0.05118897057342652, v: 0.0001607738025495257 },
    Orbit { class: 6, a: 0.2099737037950268, b: 0.08014695048539634, v: 0.0001741483853528379 },
    Orbit { class: 6, a: 0.2454492590908548, b: 0.1105117874155699, v: 0.0001851918467519151 },
    Orbit { class: 6, a: 0.2807219257864278, b: 0.1417950531570966, v: 0.0001944628638070613 },
    Orbit { class: 6, a: 0.3156842271975842, b: 0.1736604945719597, v: 0.0002022495446275152 },
    Orbit { class: 6, a: 0.3502090945177752, b: 0.2058466324693981, v: 0.0002087462382438514 },
    Orbit { class: 6, a: 0.3841684849519686, b: 0.2381284261195919, v: 0.0002141074754818308 },
    Orbit { class: 6, a: 0.4174372367906016, b: 0.2703031270422569, v: 0.0002184640913748162 },
    Orbit { class: 6, a: 0.4498926465011892, b: 0.3021845683091309, v: 0.0002219309165220329 },
    Orbit { class: 6, a: 0.4814146229807701, b: 0.333599335516572, v: 0.0002246123118340624 },
    Orbit { class: 6, a: 0.5118863625734701, b: 0.3643833735518232, v: 0.0002266062766915125 },
    Orbit { class: 6, a: 0.5411947455119144, b: 0.3943789541958179, v: 0.0002280072952230796 },
    Orbit { class: 6, a: 0.5692301500357246, b: 0.4234320144403542, v: 0.0002289082025202583 },
    Orbit { class: 6, a: 0.5958857204139576, b: 0.451389794741926, v: 0.0002294012695120025 },
    Orbit { class: 6, a: 0.2156270284785766, b: 0.02681225755444491, v: 0.0001722434488736947 },
    Orbit { class: 6, a: 0.253238505490971, b: 0.05557495747805614, v: 0.0001830237421455091 },
    Orbit { class: 6, a: 0.2902564617771537, b: 0.08569368062950249, v: 0.0001923855349997633 },
    Orbit { class: 6, a: 0.3266979823143256, b: 0.1167367450324135, v: 0.0002004067861936271 },
    Orbit { class: 6, a: 0.3625039627493614, b: 0.1483861994003304, v: 0.0002071817297354263 },
    Orbit { class: 6, a: 0.3975838937548699, b: 0.1803821503011405, v: 0.0002128250834102103 },
    Orbit { class: 6, a: 0.4318396099009774, b: 0.2124962965666424, v: 0.0002174513719440102 },
    Orbit { class: 6, a: 0.4651706555732742, b: 0.2445221837805913, v: 0.0002211661839150214 },
    Orbit { class: 6, a: 0.4974752649620969, b: 0.2762701224322987, v: 0.0002240665257813102 },
    Orbit { class: 6, a: 0.5286517579627517, b: 0.3075627775211328, v: 0.000226243951663262 },
    Orbit { class: 6, a: 0.5586001195731894, b: 0.3382311089826877, v: 0.0002277874557231869 },
    Orbit { class: 6, a: 0.5872229902021319, b: 0.3681108834741399, v: 0.0002287854314454994 },
    Orbit { class: 6, a: 0.6144258616235123, b: 0.3970397446872839, v: 0.0002293268499615575 },
    Orbit { class: 6, a: 0.2951676508064861, b: 0.02867499538750441, v: 0.0001912628201529828 },
    Orbit { class: 6, a: 0.3335085485472725, b: 0.0586787934190351, v: 0.0001992499672238701 },
    Orbit { class: 6, a: 0.3709561760636381, b: 0.08961099205022284, v: 0.0002061275533454027 },
    Orbit { class: 6, a: 0.4074722861667498, b: 0.1211627927626297, v: 0.0002119318215968572 },
    Orbit { class: 6, a: 0.4429923648839117, b: 0.1530748903554898, v: 0.0002167416581882652 },
    Orbit { class: 6, a: 0.4774428052721736, b: 0.1851176436721877, v: 0.00022064307305166 },
    Orbit { class: 6, a: 0.5107446539535904, b: 0.2170829107658179, v: 0.0002237186938699523 },
    Orbit { class: 6, a: 0.5428151370542935, b: 0.2487786689026271, v: 0.0002260480075032884 },
    Orbit { class: 6, a: 0.5735699292556964, b: 0.2800239952795016, v: 0.0002277098884558542 },
    Orbit { class: 6, a: 0.6029253794562865, b: 0.3106445702878119, v: 0.0002287845715109671 },
    Orbit { class: 6, a: 0.6307998987073145, b: 0.3404689500841194, v: 0.0002293547268236294 },
    Orbit { class: 6, a: 0.3752652273692719, b: 0.02997145098184479, v: 0.0002056073839852528 },
    Orbit { class: 6, a: 0.4135383879344028, b: 0.06086725898678011, v: 0.0002114235865831876 },
    Orbit { class: 6, a: 0.4506113885153907, b: 0.09238849548435643, v: 0.0002163175629770551 },
    Orbit { class: 6, a: 0.4864401554606072, b: 0.1242786603851851, v: 0.000220339215811165 },
    Orbit { class: 6, a: 0.5209708076611709, b: 0.1563086731483386, v: 0.0002235473176847839 },
    Orbit { class: 6, a: 0.5541422135830122, b: 0.1882696509388506, v: 0.0002260024141501235 },
    Orbit { class: 6, a: 0.5858880915113817, b: 0.2199672979126059, v: 0.0002277675929329182 },
    Orbit { class: 6, a: 0.6161399390603444, b: 0.2512165482924867, v: 0.0002289102112284834 },
    Orbit { class: 6, a: 0.644829648225509, b: 0.2818368701871888, v: 0.0002295027954625118 },
    Orbit { class: 6, a: 0.4544796274917948, b: 0.03088970405060312, v: 0.0002161281589879992 },
    Orbit { class: 6, a: 0.4919389072146628, b: 0.06240947677636835, v: 0.0002201980477395102 },
    Orbit { class: 6, a: 0.5279313026985183, b: 0.09430706144280313, v: 0.0002234952066593166 },
    Orbit { class: 6, a: 0.5624169925571135, b: 0.1263547818770374, v: 0.0002260540098520838 },
    Orbit { class: 6, a: 0.5953484627093287, b: 0.1583430788822594, v: 0.0002279157981899988 },
    Orbit { class: 6, a: 0.6266730715339185, b: 0.1900748462555988, v: 0.0002291296918565571 },
    Orbit { class: 6, a: 0.6563363204278871, b: 0.2213599519592567, v: 0.0002297533752536649 },
    Orbit { class: 6, a: 0.5314574716585696, b: 0.03152508811515374, v: 0.0002234927356465995 },
    Orbit { class: 6, a: 0.5674614932298185, b: 0.06343865291465561, v: 0.0002261288012985219 },
    Orbit { class: 6, a: 0.6017706004970264, b: 0.09551503504223952, v: 0.0002280818160923688 },
    Orbit { class: 6, a: 0.6343471270264178, b: 0.1275440099801196, v: 0.0002293773295180159 },
    Orbit { class: 6, a: 0.6651494599127802, b: 0.159325203767196, v: 0.0002300528767338634 },
    Orbit { class: 6, a: 0.6050184986005704, b: 0.03192538338496105, v: 0.0002281893855065666 },
    Orbit { class: 6, a: 0.63901635508804, b: 0.06402824353962305, v: 0.0002295720444840727 },
    Orbit { class: 6, a: 0.6711199107088448, b: 0.09609805077002909, v: 0.0002303227649026753 },
    Orbit { class: 6, a: 0.6741354429572275, b: 0.03211853196273233, v: 0.0002304831913227114 },
];

const GEN_5294: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 9.080510764308163e-05 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0002084824361987793 },
    Orbit { class: 4, a: 0.0230326168626145, b: 0.0, v: 5.011105657239616e-05 },
    Orbit { class: 4, a: 0.03757208620162394, b: 0.0, v: 5.942520409683854e-05 },
    Orbit { class: 4, a: 0.05821912033821852, b: 0.0, v: 9.564394826109721e-05 },
    Orbit { class: 4, a: 0.08403127529194872, b: 0.0, v: 0.0001185530657126338 },
    Orbit { class: 4, a: 0.1122927798060578, b: 0.0, v: 0.0001364510114230331 },
    Orbit { class: 4, a: 0.1420125319192987, b: 0.0, v: 0.0001505828825605415 },
    Orbit { class: 4, a: 0.1726396437341978, b: 0.0, v: 0.0001619298749867023 },
    Orbit { class: 4, a: 0.2038170058115696, b: 0.0, v: 0.0001712450504267789 },
    Orbit { class: 4, a: 0.2352849892876508, b: 0.0, v: 0.0001789891098164999 },
    Orbit { class: 4, a: 0.2668363354312461, b: 0.0, v: 0.0001854474955629795 },
    Orbit { class: 4, a: 0.2982941279900452, b: 0.0, v: 0.0001908148636673661 },
    Orbit { class: 4, a: 0.3295002922087076, b: 0.0, v: 0.0001952377405281833 },
    Orbit { class: 4, a: 0.3603094918363593, b: 0.0, v: 0.0001988349254282232 },
    Orbit { class: 4, a: 0.390585789517392, b: 0.0, v: 0.000201707980716005 },
    Orbit { class: 4, a: 0.4202005758160837, b: 0.0, v: 0.0002039473082709094 },
    Orbit { class: 4, a: 0.4490310061597227, b: 0.0, v: 0.0002056360279288953 },
    Orbit { class: 4, a: 0.4769586160311491, b: 0.0, v: 0.0002068525823066865 },
    Orbit { class: 4, a: 0.503867988704975, b: 0.0, v: 0.0002076724877534488 },
    Orbit { class: 4, a: 0.5296454286519962, b: 0.0, v: 0.0002081694278237885 },
    Orbit { class: 4, a: 0.554177620716485, b: 0.0, v: 0.0002084157631219326 },
    Orbit { class: 4, a: 0.5990467321921213, b: 0.0, v: 0.0002084381531128593 },
    Orbit { class: 4, a: 0.6191467096294587, b: 0.0, v: 0.0002083476277129307 },
    Orbit { class: 4, a: 0.6375251212901849, b: 0.0, v: 0.0002082686194459732 },
    Orbit { class: 4, a: 0.6540514381131168, b: 0.0, v: 0.0002082475686112415 },
    Orbit { class: 4, a: 0.668589906439151, b: 0.0, v: 0.0002083139860289915 },
    Orbit { class: 4, a: 0.6810013009681648, b: 0.0, v: 0.0002084745561831237 },
    Orbit { class: 4, a: 0.691146957873034, b: 0.0, v: 0.000208709131337589 },
    Orbit { class: 4, a: 0.6988956915141736, b: 0.0, v: 0.0002089718413297697 },
    Orbit { class: 4, a: 0.704133579486872, b: 0.0, v: 0.0002092003303479793 },
    Orbit { class: 4, a: 0.7067754398018568, b: 0.0, v: 0.0002093336148263241 },
    Orbit { class: 5, a: 0.03840368707853623, b: 0.0, v: 7.591708117365266e-05 },
    Orbit { class: 5, a: 0.09835485954117398, b: 0.0, v: 0.0001083383968169186 },
    Orbit { class: 5, a: 0.1665774947612998, b: 0.0, v: 0.000140301939529251 },
    Orbit { class: 5, a: 0.240570233536291, b: 0.0, v: 0.0001615970179286436 },
    Orbit { class: 5, a: 0.3165270770189046, b: 0.0, v: 0.0001771144187504911 },
    Orbit { class: 5, a: 0.3927386145645443, b: 0.0, v: 0.0001887760022988168 },
    Orbit { class: 5, a: 0.4678825918374656, b: 0.0, v: 0.0001973474670768214 },
    Orbit { class: 5, a: 0.5408022024266935, b: 0.0, v: 0.0002033787661234659 },
    Orbit { class: 5, a: 0.6104967445752438, b: 0.0, v: 0.0002072343626517331 },
    Orbit { class: 5, a: 0.6760910702685738, b: 0.0, v: 0.0002091177834226918 },
    Orbit { class: 6, a: 0.06655644120217392, b: 0.01936508874588424, v: 9.316684484675566e-05 },
    Orbit { class: 6, a: 0.09446246161270182, b: 0.04252442002115869, v: 0.0001116193688682976 },
    Orbit { class: 6, a: 0.1242651925452509, b: 0.06806529315354375, v: 0.0001298623551559414 },
    Orbit { class: 6, a: 0.1553438064846751, b: 0.09560957491205369, v: 0.0001450236832456426 },
    Orbit { class: 6, a: 0.187113711054267, b: 0.1245931657452888, v: 0.0001572719958149914 },
    Orbit { class: 6, a: 0.2192612628836257, b: 0.1545385828778978, v: 0.0001673234785867195 },
    Orbit { class: 6, a: 0.2515682807206955, b: 0.1851004249723368, v: 0.0001756860118725188 },
    Orbit { class: 6, a: 0.283853586628729, b: 0.2160182608272384, v: 0.0001826776290439367 },
    Orbit { class: 6, a: 0.3159578817528521, b: 0.2470799012277111, v: 0.0001885116347992865 },
    Orbit { class: 6, a: 0.3477370882791392, b: 0.2781014208986402, v: 0.0001933457860170574 },
    Orbit { class: 6, a: 0.379057696089054, b: 0.3089172523515731, v: 0.0001973060671902064 },
    Orbit { class: 6, a: 0.40979383178102, b: 0.3393750055472244, v: 0.0002004987099616311 },
    Orbit { class: 6, a: 0.4398256572859637, b: 0.369332247098773, v: 0.0002030170909281499 },
    Orbit { class: 6, a: 0.469038411471848, b: 0.3986541005609877, v: 0.000204946146011908 },
    Orbit { class: 6, a: 0.4973216048301053, b: 0.4272112491408562, v: 0.0002063653565200186 },
    Orbit { class: 6, a: 0.5245681526132446, b: 0.4548781735309936, v: 0.0002073507927381027 },
    Orbit { class: 6, a: 0.5506733911803888, b: 0.4815315355023251, v: 0.0002079764593256122 },
    Orbit { class: 6, a: 0.5755339829522474, b: 0.5070486445801855, v: 0.0002083150534968778 },
    Orbit { class: 6, a: 0.1305472386056362, b: 0.02284970375722366, v: 0.0001262715121590664 },
    Orbit { class: 6, a: 0.1637327908216477, b: 0.04812254338288384, v: 0.0001414386128545972 },
    Orbit { class: 6, a: 0.1972734634149637, b: 0.07531734457511935, v: 0.0001538740401313898 },
    Orbit { class: 6, a: 0.230869465311013, b: 0.1039043639882017, v: 0.0001642434942331432 },
    Orbit { class: 6, a: 0.264389921833816, b: 0.1334526587117626, v: 0.0001729790609237496 },
    Orbit { class: 6, a: 0.2977171599622171, b: 0.1636414868936382, v: 0.0001803505190260828 },
    Orbit { class: 6, a: 0.330729390303231, b: 0.1942195406166568, v: 0.0001865475350079657 },
    Orbit { class: 6, a: 0.3633069198219073, b: 0.2249752879943753, v: 0.0001917182669679069 },
    Orbit { class: 6, a: 0.3953346955922727, b: 0.2557218821820032, v: 0.0001959851709034382 },
    Orbit { class: 6, a: 0.4267018394184914, b: 0.2862897925213193, v: 0.0001994529548117882 },
    Orbit { class: 6, a: 0.4573009622571704, b: 0.3165224536636518, v: 0.0002022138911146548 },
    Orbit { class: 6, a: 0.4870279559856109, b: 0.3462730221636496, v: 0.0002043518024208592 },
    Orbit { class: 6, a: 0.5157819581450322, b: 0.3754016870282835, v: 0.000205945031301811 },
    Orbit { class: 6, a: 0.5434651666465393, b: 0.4037733784993613, v: 0.0002070685715318472 },
    Orbit { class: 6, a: 0.5699823887764627, b: 0.4312557784139123, v: 0.0002077955310694373 },
    Orbit { class: 6, a: 0.5952403350947741, b: 0.457717536712211, v: 0.0002081980387824712 },
    Orbit { class: 6, a: 0.2025152599210369, b: 0.02520253617719557, v: 0.0001521318610377956 },
    Orbit { class: 6, a: 0.2381066653274425, b: 0.05223254506119, v: 0.0001622772720185755 },
    Orbit { class: 6, a: 0.2732823383651612, b: 0.0806066968858862, v: 0.0001710498139420709 },
    Orbit { class: 6, a: 0.3080137692611118, b: 0.1099335754081255, v: 0.0001785911149448736 },
    Orbit { class: 6, a: 0.3422405614587601, b: 0.1399120955959857, v: 0.0001850125313687736 },
    Orbit { class: 6, a: 0.375880877389042, b: 0.1702977801651705, v: 0.0001904229703933298 },
    Orbit { class: 6, a: 0.4088458383438932, b: 0.200879925660168, v: 0.0001949259956121987 },
    Orbit { class: 6, a: 0.4410450550841152, b: 0.2314703052180836, v: 0.000198616154536396 },
    Orbit { class: 6, a: 0.4723879420561312, b: 0.2618972111375892, v: 0.000201579058564137 },
    Orbit { class: 6, a: 0.5027843561874343, b: 0.292001319560027, v: 0.0002038934198707418 },
    Orbit { class: 6, a: 0.5321453674452458, b: 0.3216322555190551, v: 0.0002056334060538251 },
    Orbit { class: 6, a: 0.560383911383403, b: 0.3506456615934198, v: 0.0002068705959462289 },
    Orbit { class: 6, a: 0.5874150706875146, b: 0.3789007181306267, v: 0.0002076753906106002 },
    Orbit { class: 6, a: 0.6131559381660038, b: 0.4062580170572782, v: 0.0002081179391734803 },
    Orbit { class: 6, a: 0.2778497016394506, b: 0.02696271276876226, v: 0.0001700345216228943 },
    Orbit { class: 6, a: 0.3143733562261912, b: 0.05523469316960465, v: 0.000177490677999041 },
    Orbit { class: 6, a: 0.3501485810261827, b: 0.08445193201626464, v: 0.0001839659377002642 },
    Orbit { class: 6, a: 0.3851430322303653, b: 0.1143263119336083, v: 0.0001894987462975169 },
    Orbit { class: 6, a: 0.4193013979470415, b: 0.1446177898344475, v: 0.0001941548809452595 },
    Orbit { class: 6, a: 0.4525585960458567, b: 0.1751165438438091, v: 0.0001980078427252384 },
    Orbit { class: 6, a: 0.4848447779622947, b: 0.205633830674566, v: 0.0002011296284744488 },
    Orbit { class: 6, a: 0.5160871208276894, b: 0.2359965487229226, v: 0.0002035888456966776 },
    Orbit { class: 6, a: 0.5462112185696926, b: 0.2660430223139146, v: 0.0002054516325352142 },
    Orbit { class: 6, a: 0.5751425068101756, b: 0.2956193664498032, v: 0.0002067831033092635 },
    Orbit { class: 6, a: 0.6028073872853597, b: 0.3245763905312779, v: 0.0002076485320284876 },
    Orbit { class: 6, a: 0.6291338275278409, b: 0.3527670026206972, v: 0.0002081141439525255 },
    Orbit { class: 6, a: 0.3541797528439391, b: 0.0282385347943555, v: 0.0001834383015469222 },
    Orbit { class: 6, a: 0.3908234972074657, b: 0.05741296374713106, v: 0.0001889540591777677 },
    Orbit { class: 6, a: 0.426440845010759, b: 0.08724646633650199, v: 0.0001936677023597375 },
    Orbit { class: 6, a: 0.4609949666553286, b: 0.1175034422915616, v: 0.0001976176495066504 },
    Orbit { class: 6, a: 0.4944389496536006, b: 0.1479755652628428, v: 0.0002008536004560983 },
    Orbit { class: 6, a: 0.5267194884346086, b: 0.1784740659484352, v: 0.0002034280351712291 },
    Orbit { class: 6, a: 0.557778781022099, b: 0.2088245700431244, v: 0.0002053944466027758 },
    Orbit { class: 6, a: 0.587556376353667, b: 0.2388628136570763, v: 0.000206807764288236 },
    Orbit { class: 6, a: 0.6159910016391269, b: 0.2684308928769185, v: 0.0002077250949661599 },
    Orbit { class: 6, a: 0.6430219602956267, b: 0.2973740761960252, v: 0.000208206244070532 },
    Orbit { class: 6, a: 0.4300647036213646, b: 0.02916399920493977, v: 0.0001934374486546626 },
    Orbit { class: 6, a: 0.4661486308935531, b: 0.05898803024755659, v: 0.00019741070104843 },
    Orbit { class: 6, a: 0.5009658555287261, b: 0.08924162698525409, v: 0.0002007129290388658 },
    Orbit { class: 6, a: 0.5344824270447704, b: 0.1197185199637321, v: 0.0002033736947471293 },
    Orbit { class: 6, a: 0.5666575997416371, b: 0.1502300756161382, v: 0.0002054287125902493 },
    Orbit { class: 6, a: 0.5974457471404752, b: 0.1806004191913564, v: 0.0002069184936818894 },
    Orbit { class: 6, a: 0.6267984444116886, b: 0.2106621764786252, v: 0.0002078883689808782 },
    Orbit { class: 6, a: 0.6546664713575417, b: 0.2402526932671914, v: 0.0002083886366116359 },
    Orbit { class: 6, a: 0.5042711004437253, b: 0.02982529203607657, v: 0.0002006593275470817 },
    Orbit { class: 6, a: 0.539212745677438, b: 0.06008728062339922, v: 0.0002033728426135397 },
    Orbit { class: 6, a: 0.5726819437668618, b: 0.09058227674571398, v: 0.0002055008781377608 },
    Orbit { class: 6, a: 0.6046469254207278, b: 0.12112192358034, v: 0.0002070651783518502 },
    Orbit { class: 6, a: 0.6350716157434952, b: 0.151528640479158, v: 0.000208095333509432 },
    Orbit { class: 6, a: 0.6639177679185454, b: 0.1816314681255552, v: 0.0002086284998988521 },
    Orbit { class: 6, a: 0.5757276040972253, b: 0.0302699175257544, v: 0.0002055549387644668 },
    Orbit { class: 6, a: 0.6090265823139756, b: 0.0607840229787077, v: 0.0002071871850267654 },
    Orbit { class: 6, a: 0.6406735344387661, b: 0.09135459984176636, v: 0.0002082856600431965 },
    Orbit { class: 6, a: 0.6706397927793709, b: 0.121802415596659, v: 0.0002088705858819358 },
    Orbit { class: 6, a: 0.6435019674426665, b: 0.03052608357660639, v: 0.0002083995867536322 },
    Orbit { class: 6, a: 0.6747218676375681, b: 0.06112185773983089, v: 0.0002090509712889637 },
];

const GEN_5810: &[Orbit] = &[
    Orbit { class: 1, a: 0.0, b: 0.0, v: 9.735347946175486e-06 },
    Orbit { class: 2, a: 0.0, b: 0.0, v: 0.0001907581241803167 },
    Orbit { class: 3, a: 0.0, b: 0.0, v: 0.0001901059546737578 },
    Orbit { class: 4, a: 0.01182361662400277, b: 0.0, v: 3.926424538919212e-05 },
    Orbit { class: 4, a: 0.03062145009138958, b: 0.0, v: 6.667905467294381e-05 },
    Orbit { class: 4, a: 0.05329794036834243, b: 0.0, v: 8.868891315019136e-05 },
    Orbit { class: 4, a: 0.0784816553286222, b: 0.0, v: 0.0001066306000958872 },
    Orbit { class: 4, a: 0.1054038157636201, b: 0.0, v: 0.0001214506743336128 },
    Orbit { class: 4, a: 0.1335577797766211, b: 0.0, v: 0.0001338054681640871 },
    Orbit { class: 4, a: 0.1625769955502252, b: 0.0, v: 0.0001441677023628504 },
    Orbit { class: 4, a: 0.1921787193412792, b: 0.0, v: 0.0001528880200826557 },
    Orbit { class: 4, a: 0.2221340534690548, b: 0.0, v: 0.0001602330623773609 },
    Orbit { class: 4, a: 0.2522504912791132, b: 0.0, v: 0.0001664102653445244 },
    Orbit { class: 4, a: 0.2823610860679697, b: 0.0, v: 0.0001715845854011323 },
    Orbit { class: 4, a: 0.312317396626756, b: 0.0, v: 0.0001758901000133069 },
    Orbit { class: 4, a: 0.3419847036953789, b: 0.0, v: 0.0001794382485256736 },
    Orbit { class: 4, a: 0.3712386456999758, b: 0.0, v: 0.0001823238106757407 },
    Orbit { class: 4, a: 0.3999627649876828, b: 0.0, v: 0.0001846293252959976 },
    Orbit { class: 4, a: 0.4280466458648093, b: 0.0, v: 0.0001864284079323098 },
    Orbit { class: 4, a: 0.4553844360185711, b: 0.0, v: 0.0001877882694626914 },
    Orbit { class: 4, a: 0.4818736094437834, b: 0.0, v: 0.0001887716321852025 },
    Orbit { class: 4, a: 0.5074138709260629, b: 0.0, v: 0.0001894381638175673 },
    Orbit { class: 4, a: 0.5319061304570707, b: 0.0, v: 0.0001898454899533629 },
    Orbit { class: 4, a: 0.5552514978677286, b: 0.0, v: 0.0001900497929577815 },
    Orbit { class: 4, a: 0.5981009025246183, b: 0.0, v: 0.0001900671501924092 },
    Orbit { class: 4, a: 0.6173990192228116, b: 0.0, v: 0.000189983755553351 },
    Orbit { class: 4, a: 0.6351365239411131, b: 0.0, v: 0.0001899014113156229 },
    Orbit { class: 4, a: 0.65120102282272, b: 0.0, v: 0.0001898581257705106 },
    Orbit { class: 4, a: 0.665475836394812, b: 0.0, v: 0.0001898804756095753 },
    Orbit { class: 4, a: 0.677841041485337, b: 0.0, v: 0.0001899793610426402 },
    Orbit { class: 4, a: 0.688176088748411, b: 0.0, v: 0.0001901464554844117 },
    Orbit { class: 4, a: 0.6963645267094598, b: 0.0, v: 0.0001903533246259542 },
    Orbit { class: 4, a: 0.7023010617153579, b: 0.0, v: 0.0001905556158463228 },
    Orbit { class: 4, a: 0.7059004636628753, b: 0.0, v: 0.0001907037155663528 },
    Orbit { class: 5, a: 0.03552470312472575, b: 0.0, v: 5.992997844249967e-05 },
    Orbit { class: 5, a: 0.09151176620841284, b: 0.0, v: 9.749059382456977e-05 },
    Orbit { class: 5, a: 0.156619793006898, b: 0.0, v: 0.0001241680804599158 },
    Orbit { class: 5, a: 0.2265467599271907, b: 0.0, v: 0.000143762615429936 },
    Orbit { class: 5, a: 0.2988242318581361, b: 0.0, v: 0.0001584200054793902 },
    Orbit { class: 5, a: 0.3717482419703886, b: 0.0, v: 0.0001694436550982744 },
    Orbit { class: 5, a: 0.4440094491758889, b: 0.0, v: 0.0001776617014018108 },
    Orbit { class: 5, a: 0.5145337096756643, b: 0.0, v: 0.0001836132434440077 },
    Orbit { class: 5, a: 0.582405367286023, b: 0.0, v: 0.0001876494727075983 },
    Orbit { class: 5, a: 0.646828396104337, b: 0.0, v: 0.0001899906535336482 },
    Orbit { class: 6, a: 0.06095964259104373, b: 0.01787828275342931, v: 8.14325282076735e-05 },
    Orbit { class: 6, a: 0.08811962270959388, b: 0.03953888740792096, v: 9.998859890887728e-05 },
    Orbit { class: 6, a: 0.1165936722428831, b: 0.0637812179772299, v: 0.0001156199403068359 },
    Orbit { class: 6, a: 0.1460232857031785, b: 0.08985890813745037, v: 0.0001287632092635513 },
    Orbit { class: 6, a: 0.1761197110181755, b: 0.1172606510576162, v: 0.0001398378643365139 },
    Orbit { class: 6, a: 0.2066471190463718, b: 0.1456102876970995, v: 0.0001491876468417391 },
    Orbit { class: 6, a: 0.2374076026328152, b: 0.1746153823011775, v: 0.0001570855679175456 },
    Orbit { class: 6, a: 0.2682305474337051, b: 0.2040383070295584, v: 0.0001637483948103775 },
    Orbit { class: 6, a: 0.2989653312142369, b: 0.2336788634003698, v: 0.0001693500566632843 },
    Orbit { class: 6, a: 0.3294762752772209, b: 0.2633632752654219, v: 0.0001740322769393633 },
    Orbit { class: 6, a: 0.3596390887276086, b: 0.2929369098051601, v: 0.0001779126637278296 },
    Orbit { class: 6, a: 0.3893383046398812, b: 0.3222592785275512, v: 0.0001810908108835412 },
    Orbit { class: 6, a: 0.4184653789358347, b: 0.3512004791195743, v: 0.000183652913260019 },
    Orbit { class: 6, a: 0.4469172319076166, b: 0.3796385677684537, v: 0.0001856752841777379 },
    Orbit { class: 6, a: 0.4745950813276976, b: 0.4074575378263879, v: 0.0001872270566606832 },
    Orbit { class: 6, a: 0.5014034601410262, b: 0.4345456906027828, v: 0.0001883722645591307 },
    Orbit { class: 6, a: 0.527249340455124, b: 0.4607942515205134, v: 0.0001891714324525297 },
    Orbit { class: 6, a: 0.5520413051846366, b: 0.486096128418172, v: 0.0001896827480450146 },
    Orbit { class: 6, a: 0.5756887237503077, b: 0.510344739534279, v: 0.0001899628417059528 },
    Orbit { class: 6, a: 0.1225039430588352, b: 0.02136455922655793, v: 0.0001123301829001669 },
    Orbit { class: 6, a: 0.1539113217321372, b: 0.04520926166137188, v: 0.0001253698826711277 },
    Orbit { class: 6, a: 0.1856213098637712, b: 0.07086468177864819, v: 0.0001366266117678531 },
    Orbit { class: 6, a: 0.2174998728035131, b: 0.09785239488772918, v: 0.0001462736856106918 },
    Orbit { class: 6, a: 0.249412833693833, b: 0.125810639626721, v: 0.0001545076466685412 },
    Orbit { class: 6, a: 0.281232156214348, b: 0.1544529125047001, v: 0.0001615096280814007 },
    Orbit { class: 6, a: 0.3128372276456111, b: 0.1835433512202753, v: 0.0001674366639741759 },
    Orbit { class: 6, a: 0.3441145160177973, b: 0.2128813258619585, v: 0.00017242250024379 },
    Orbit { class: 6, a: 0.374956771485351, b: 0.2422913734880829, v: 0.0001765810822987288 },
    Orbit { class: 6, a: 0.405262173201561, b: 0.2716163748391453, v: 0.0001800104126010751 },
    Orbit { class: 6, a: 0.4349335453522385, b: 0.300712767124028, v: 0.0001827960437331284 },
    Orbit { class: 6, a: 0.4638776641524965, b: 0.3294470677216479, v: 0.0001850140300716308 },
    Orbit { class: 6, a: 0.4920046410462687, b: 0.3576932543699155, v: 0.0001867333507394938 },
    Orbit { class: 6, a: 0.5192273554861704, b: 0.3853307059757764, v: 0.0001880178688638289 },
    Orbit { class: 6, a: 0.5454609081136522, b: 0.4122425044452694, v: 0.0001889278925654758 },
    Orbit { class: 6, a: 0.570622066142414, b: 0.4383139587781027, v: 0.0001895213832507346 },
    Orbit { class: 6, a: 0.5946286755181518, b: 0.4634312536300553, v: 0.000189854827739742 },
    Orbit { class: 6, a: 0.1905370790924295, b: 0.02371311537781979, v: 0.0001349105935937341 },
    Orbit { class: 6, a: 0.2242518717748009, b: 0.04917878059254806, v: 0.0001444060068369326 },
    Orbit { class: 6, a: 0.2577190808025936, b: 0.07595498960495142, v: 0.0001526797390930008 },
    Orbit { class: 6, a: 0.2908724534927187, b: 0.10369910831911, v: 0.0001598208771406474 },
    Orbit { class: 6, a: 0.3236354020056219, b: 0.1321348584450234, v: 0.0001659354368615331 },
    Orbit { class: 6, a: 0.3559267359304543, b: 0.1610316571314789, v: 0.000171127991094644 },
    Orbit { class: 6, a: 0.3876637123676956, b: 0.1901912080395707, v: 0.000175495272560144 },
    Orbit { class: 6, a: 0.4187636705218842, b: 0.219438495013795, v: 0.0001791247850802529 },
    Orbit { class: 6, a: 0.4491449019883107, b: 0.2486155334763858, v: 0.0001820954300877716 },
    Orbit { class: 6, a: 0.4787270932425445, b: 0.2775768931812335, v: 0.0001844788524548449 },
    Orbit { class: 6, a: 0.5074315153055574, b: 0.306186378659112, v: 0.000186340948170622 },
    Orbit { class: 6, a: 0.5351810507738336, b: 0.3343144718152556, v: 0.0001877433008795068 },
    Orbit { class: 6, a: 0.5619001025975381, b: 0.3618362729028427, v: 0.0001887444543705232 },
    Orbit { class: 6, a: 0.5875144035268046, b: 0.3886297583620408, v: 0.0001894009829375006 },
    Orbit { class: 6, a: 0.6119507308734495, b: 0.4145742277792031, v: 0.0001897683345035198 },
    Orbit { class: 6, a: 0.2619733870119463, b: 0.02540047186389353, v: 0.0001517327037467653 },
    Orbit { class: 6, a: 0.2968149743237949, b: 0.05208107018543989, v: 0.0001587740557483543 },
    Orbit { class: 6, a: 0.3310451504860488, b: 0.07971828470885599, v: 0.0001649093382274097 },
    Orbit { class: 6, a: 0.3646215567376676, b: 0.1080465999177927, v: 0.0001701915216193265 },
    Orbit { class: 6, a: 0.397491678527936, b: 0.1368413849366629, v: 0.0001746847753144065 },
    Orbit { class: 6, a: 0.4295967403772029, b: 0.1659073184763559, v: 0.000178455551200757 },
    Orbit { class: 6, a: 0.4608742854473447, b: 0.1950703730454614, v: 0.0001815687562112174 },
    Orbit { class: 6, a: 0.4912598858949903, b: 0.2241721144376724, v: 0.0001840864370663302 },
    Orbit { class: 6, a: 0.5206882758945558, b: 0.2530655255406489, v: 0.0001860676785390006 },
    Orbit { class: 6, a: 0.549094091401982, b: 0.2816118409731066, v: 0.0001875690583743703 },
    Orbit { class: 6, a: 0.5764123302025542, b: 0.3096780504593238, v: 0.0001886453236347225 },
    Orbit { class: 6, a: 0.6025786004213506, b: 0.3371348366394987, v: 0.0001893501123329645 },
    Orbit { class: 6, a: 0.6275291964794956, b: 0.3638547827694396, v: 0.0001897366184519868 },
    Orbit { class: 6, a: 0.3348189479861771, b: 0.02664841935537443, v: 0.0001643908815152736 },
    Orbit { class: 6, a: 0.3699515545855295, b: 0.05424000066843495, v: 0.0001696300350907768 },
    Orbit { class: 6, a: 0.4042003071474669, b: 0.08251992715430854, v: 0.0001741553103844483 },
    Orbit { class: 6, a: 0.4375320100182624, b: 0.111269518248371, v: 0.0001780015282386092 },
    Orbit { class: 6, a: 0.4699054490335947, b: 0.1402964116467816, v: 0.0001812116787077125 },
    Orbit { class: 6, a: 0.5012739879431952, b: 0.1694275117584291, v: 0.0001838323158085421 },
    Orbit { class: 6, a: 0.5315874883754966, b: 0.1985038235312689, v: 0.0001859113119837737 },
    Orbit { class: 6, a: 0.5607937109622116, b: 0.2273765660020893, v: 0.0001874969220221698 },
    Orbit { class: 6, a: 0.588839322349552, b: 0.2559041492849764, v: 0.0001886375612681076 },
    Orbit { class: 6, a: 0.6156705979160163, b: 0.2839497251976899, v: 0.0001893819575809276 },
    Orbit { class: 6, a: 0.6412338809078123, b: 0.311379106050069, v: 0.0001897794748256767 },
    Orbit { class: 6, a: 0.4076051259257167, b: 0.02757792290858463, v: 0.0001738963926584846 },
    Orbit { class: 6, a: 0.442378812579152, b: 0.05584136834984293, v: 0.0001777442359873466 },
    Orbit { class: 6, a: 0.4760480917328258, b: 0.08457772087727143, v: 0.0001810010815068719 },
    Orbit { class: 6, a: 0.5085838725946297, b: 0.1135975846359248, v: 0.0001836920318248129 },
    Orbit { class: 6, a: 0.5399513637391218, b: 0.1427286904765053, v: 0.0001858489473214328 },
    Orbit { class: 6, a: 0.570111843363638, b: 0.1718112740057635, v: 0.0001875079342496592 },
    Orbit { class: 6, a: 0.5990240530606021, b: 0.2006944855985351, v: 0.000188708023910231 },
    Orbit { class: 6, a: 0.6266452685139695, b: 0.2292335090598907, v: 0.0001894905752176822 },
    Orbit { class: 6, a: 0.6529320971415942, b: 0.2572871512353714, v: 0.0001898991061200695 },
    Orbit { class: 6, a: 0.4791583834610126, b: 0.02826094197735932, v: 0.0001809065016458791 },
    Orbit { class: 6, a: 0.513037395279694, b: 0.05699871359683649, v: 0.0001836297121596799 },
    Orbit { class: 6, a: 0.5456252429628476, b: 0.08602712528554395, v: 0.0001858426916241869 },
    Orbit { class: 6, a: 0.5768956329682385, b: 0.1151748137221281, v: 0.0001875654101134641 },
    Orbit { class: 6, a: 0.6068186944699046, b: 0.1442811654136362, v: 0.0001888240751833503 },
    Orbit { class: 6, a: 0.6353622248024907, b: 0.173193032165768, v: 0.0001896497383866979 },
    Orbit { class: 6, a: 0.6624927035731797, b: 0.2017619958756061, v: 0.0001900775530219121 },
    Orbit { class: 6, a: 0.5484933508028488, b: 0.02874219755907391, v: 0.0001858525041478814 },
    Orbit { class: 6, a: 0.5810207682142106, b: 0.05778312123713695, v: 0.0001876248690077947 },
    Orbit { class: 6, a: 0.6120955197181353, b: 0.08695262371439526, v: 0.0001889404439064607 },
    Orbit { class: 6, a: 0.6416944284294319, b: 0.1160893767057166, v: 0.000189816853926529 },
    Orbit { class: 6, a: 0.669792639173126, b: 0.1450378826743251, v: 0.0001902779940661772 },
    Orbit { class: 6, a: 0.6147594390585488, b: 0.02904957622341456, v: 0.0001890125641731815 },
    Orbit { class: 6, a: 0.6455390026356783, b: 0.05823809152617197, v: 0.0001899434637795751 },
    Orbit { class: 6, a: 0.6747258588365477, b: 0.08740384899884715, v: 0.0001904520856831751 },
    Orbit { class: 6, a: 0.6772135750395347, b: 0.02919946135808105, v: 0.0001905534498734563 },
];
