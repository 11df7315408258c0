"""Octahedral orbit parameters of the Lebedev-Laikov sphere rules.

Each rule maps its point count to a list of ``(orbit, a, b, weight)`` rows.
Orbit codes: 1 = (1,0,0), 2 = (0,a,a) with a=1/sqrt(2), 3 = (a,a,a) with
a=1/sqrt(3), 4 = (a,a,b), 5 = (a,b,0), 6 = (a,b,c). Weights sum to one.
"""

ORBITS = {
    6: [
        (1, 0.0, 0.0, 0.1666666666666667),
    ],
    14: [
        (1, 0.0, 0.0, 0.06666666666666667),
        (3, 0.0, 0.0, 0.075),
    ],
    26: [
        (1, 0.0, 0.0, 0.04761904761904762),
        (2, 0.0, 0.0, 0.0380952380952381),
        (3, 0.0, 0.0, 0.03214285714285714),
    ],
    38: [
        (1, 0.0, 0.0, 0.009523809523809525),
        (3, 0.0, 0.0, 0.03214285714285714),
        (5, 0.4597008433809831, 0.0, 0.02857142857142857),
    ],
    50: [
        (1, 0.0, 0.0, 0.0126984126984127),
        (2, 0.0, 0.0, 0.02257495590828924),
        (3, 0.0, 0.0, 0.02109375),
        (4, 0.3015113445777636, 0.0, 0.02017333553791887),
    ],
    74: [
        (1, 0.0, 0.0, 0.0005130671797338464),
        (2, 0.0, 0.0, 0.01660406956574204),
        (3, 0.0, 0.0, -0.02958603896103896),
        (4, 0.4803844614152614, 0.0, 0.02657620708215946),
        (5, 0.3207726489807764, 0.0, 0.01652217099371571),
    ],
    86: [
        (1, 0.0, 0.0, 0.01154401154401154),
        (3, 0.0, 0.0, 0.01194390908585628),
        (4, 0.3696028464541502, 0.0, 0.0111105557106034),
        (4, 0.6943540066026664, 0.0, 0.01187650129453714),
        (5, 0.3742430390903412, 0.0, 0.01181230374690448),
    ],
    110: [
        (1, 0.0, 0.0, 0.003828270494937162),
        (3, 0.0, 0.0, 0.009793737512487513),
        (4, 0.1851156353447362, 0.0, 0.008211737283191111),
        (4, 0.6904210483822922, 0.0, 0.009942814891178103),
        (4, 0.3956894730559419, 0.0, 0.009595471336070962),
        (5, 0.4783690288121502, 0.0, 0.009694996361663029),
    ],
    146: [
        (1, 0.0, 0.0, 0.0005996313688621381),
        (2, 0.0, 0.0, 0.007372999718620756),
        (3, 0.0, 0.0, 0.007210515360144488),
        (4, 0.6764410400114264, 0.0, 0.007116355493117555),
        (4, 0.4174961227965453, 0.0, 0.006753829486314477),
        (4, 0.1574676672039082, 0.0, 0.007574394159054034),
        (6, 0.1403553811713183, 0.4493328323269557, 0.006991087353303262),
    ],
    170: [
        (1, 0.0, 0.0, 0.005544842902037365),
        (2, 0.0, 0.0, 0.006071332770670752),
        (3, 0.0, 0.0, 0.006383674773515093),
        (4, 0.2551252621114134, 0.0, 0.00518338758774779),
        (4, 0.6743601460362766, 0.0, 0.006317929009813725),
        (4, 0.431891069671941, 0.0, 0.006201670006589077),
        (5, 0.2613931360335988, 0.0, 0.005477143385137348),
        (6, 0.4990453161796037, 0.1446630744325115, 0.005968383987681156),
    ],
    194: [
        (1, 0.0, 0.0, 0.001782340447244611),
        (2, 0.0, 0.0, 0.005716905949977102),
        (3, 0.0, 0.0, 0.005573383178848738),
        (4, 0.6712973442695226, 0.0, 0.005608704082587997),
        (4, 0.2892465627575439, 0.0, 0.005158237711805383),
        (4, 0.4446933178717437, 0.0, 0.005518771467273614),
        (4, 0.1299335447650067, 0.0, 0.004106777028169394),
        (5, 0.3457702197611283, 0.0, 0.005051846064614808),
        (6, 0.159041710538353, 0.8360360154824589, 0.005530248916233094),
    ],
    230: [
        (1, 0.0, 0.0, -0.05522639919727325),
        (3, 0.0, 0.0, 0.004450274607445226),
        (4, 0.4492044687397611, 0.0, 0.004496841067921404),
        (4, 0.2520419490210201, 0.0, 0.00504915345047875),
        (4, 0.6981906658447242, 0.0, 0.003976408018051883),
        (4, 0.658740524346096, 0.0, 0.004401400650381014),
        (4, 0.0403854405009766, 0.0, 0.01724544350544401),
        (5, 0.5823842309715584, 0.0, 0.004231083095357343),
        (5, 0.3545877390518688, 0.0, 0.005198069864064399),
        (6, 0.2272181808998187, 0.4864661535886647, 0.004695720972568883),
    ],
    266: [
        (1, 0.0, 0.0, -0.001313769127326952),
        (2, 0.0, 0.0, -0.002522728704859336),
        (3, 0.0, 0.0, 0.004186853881700583),
        (4, 0.7039373391585475, 0.0, 0.005315167977810885),
        (4, 0.1012526248572414, 0.0, 0.004047142377086219),
        (4, 0.4647448726420539, 0.0, 0.00411248239440699),
        (4, 0.3277420654971629, 0.0, 0.003595584899758782),
        (4, 0.6620338663699974, 0.0, 0.004256131351428158),
        (5, 0.8506508083520399, 0.0, 0.00422958270064724),
        (6, 0.3233484542692899, 0.1153112011009701, 0.004080914225780505),
        (6, 0.2314790158712601, 0.5244939240922365, 0.004071467593830964),
    ],
    302: [
        (1, 0.0, 0.0, 0.0008545911725128148),
        (3, 0.0, 0.0, 0.003599119285025571),
        (4, 0.3515640345570105, 0.0, 0.003449788424305883),
        (4, 0.6566329410219612, 0.0, 0.003604822601419882),
        (4, 0.4729054132581005, 0.0, 0.003576729661743367),
        (4, 0.09618308522614784, 0.0, 0.002352101413689164),
        (4, 0.2219645236294178, 0.0, 0.003108953122413675),
        (4, 0.7011766416089545, 0.0, 0.003650045807677255),
        (5, 0.2644152887060663, 0.0, 0.002982344963171804),
        (5, 0.5718955891878961, 0.0, 0.00360082093221646),
        (6, 0.2510034751770465, 0.8000727494073951, 0.003571540554273387),
        (6, 0.1233548532583327, 0.4127724083168531, 0.00339231220500617),
    ],
    350: [
        (1, 0.0, 0.0, 0.003006796749453936),
        (3, 0.0, 0.0, 0.003050627745650771),
        (4, 0.7068965463912316, 0.0, 0.001621104600288991),
        (4, 0.4794682625712025, 0.0, 0.003005701484901752),
        (4, 0.1927533154878019, 0.0, 0.002990992529653774),
        (4, 0.6930357961327123, 0.0, 0.002982170644107595),
        (4, 0.3608302115520091, 0.0, 0.002721564237310992),
        (4, 0.6498486161496169, 0.0, 0.003033513795811141),
        (5, 0.1932945013230339, 0.0, 0.003007949555218533),
        (5, 0.3800494919899303, 0.0, 0.002881964603055307),
        (6, 0.2899558825499574, 0.7934537856582315, 0.002958357626535696),
        (6, 0.09684121455103957, 0.8280801506686862, 0.003036020026407088),
        (6, 0.1833434647041659, 0.9074658265305127, 0.002832187403926303),
    ],
    434: [
        (1, 0.0, 0.0, 0.0005265897968224436),
        (2, 0.0, 0.0, 0.002548219972002607),
        (3, 0.0, 0.0, 0.002512317418927307),
        (4, 0.6909346307509111, 0.0, 0.002530403801186355),
        (4, 0.1774836054609158, 0.0, 0.002014279020918528),
        (4, 0.4914342637784746, 0.0, 0.002501725168402936),
        (4, 0.6456664707424256, 0.0, 0.002513267174597564),
        (4, 0.2861289010307638, 0.0, 0.002302694782227416),
        (4, 0.07568084367178018, 0.0, 0.001462495621594614),
        (4, 0.3927259763368002, 0.0, 0.00244537343731298),
        (5, 0.8818132877794288, 0.0, 0.002417442375638981),
        (5, 0.9776428111182649, 0.0, 0.001910951282179532),
        (6, 0.2054823696403044, 0.8689460322872412, 0.002416930044324775),
        (6, 0.5905157048925271, 0.7999278543857286, 0.002512236854563495),
        (6, 0.5550152361076807, 0.7717462626915901, 0.002496644054553086),
        (6, 0.9371809858553722, 0.3344363145343455, 0.002236607760437849),
    ],
    590: [
        (1, 0.0, 0.0, 0.0003095121295306187),
        (3, 0.0, 0.0, 0.001852379698597489),
        (4, 0.7040954938227469, 0.0, 0.001871790639277744),
        (4, 0.6807744066455244, 0.0, 0.001858812585438317),
        (4, 0.6372546939258752, 0.0, 0.001852028828296213),
        (4, 0.5044419707800358, 0.0, 0.001846715956151242),
        (4, 0.4215761784010967, 0.0, 0.001818471778162769),
        (4, 0.3317920736472123, 0.0, 0.001749564657281154),
        (4, 0.2384736701421887, 0.0, 0.001617210647254411),
        (4, 0.1459036449157763, 0.0, 0.001384737234851692),
        (4, 0.06095034115507196, 0.0, 0.000976433116505105),
        (5, 0.6116843442009876, 0.0, 0.001857161196774078),
        (5, 0.3964755348199858, 0.0, 0.001705153996395864),
        (5, 0.1724782009907724, 0.0, 0.001300321685886048),
        (6, 0.561026380862206, 0.3518280927733519, 0.001842866472905286),
        (6, 0.474239284255198, 0.263471665593795, 0.001802658934377451),
        (6, 0.598412649788538, 0.1816640840360209, 0.00184983056044366),
        (6, 0.3791035407695563, 0.1720795225656878, 0.001713904507106709),
        (6, 0.2778673190586244, 0.08213021581932511, 0.001555213603396808),
        (6, 0.5033564271075117, 0.08999205842074876, 0.001802239128008525),
    ],
    770: [
        (1, 0.0, 0.0, 0.0002192942088181184),
        (2, 0.0, 0.0, 0.00143643361731908),
        (3, 0.0, 0.0, 0.001421940344335877),
        (4, 0.0508720441050236, 0.0, 0.0006798123511050502),
        (4, 0.1228198790178831, 0.0, 0.0009913184235294911),
        (4, 0.2026890814408786, 0.0, 0.001180207833238949),
        (4, 0.2847745156464294, 0.0, 0.001296599602080921),
        (4, 0.3656719078978026, 0.0, 0.001365871427428316),
        (4, 0.4428264886713469, 0.0, 0.001402988604775325),
        (4, 0.5140619627249735, 0.0, 0.001418645563595609),
        (4, 0.6306401219166803, 0.0, 0.001421376741851662),
        (4, 0.6716883332022612, 0.0, 0.001423996475490962),
        (4, 0.6979792685336881, 0.0, 0.001431554042178567),
        (5, 0.1446865674195309, 0.0, 0.0009254401499865368),
        (5, 0.3390263475411216, 0.0, 0.001250239995053509),
        (5, 0.5335804651263506, 0.0, 0.00139436584332923),
        (6, 0.06944024393349413, 0.2355187894242326, 0.001127089094671749),
        (6, 0.226900410952946, 0.410218247404573, 0.00134575376091067),
        (6, 0.08025574607775339, 0.6214302417481605, 0.001424957283316783),
        (6, 0.1467999527896572, 0.3245284345717394, 0.00126152334123775),
        (6, 0.1571507769824727, 0.522448218969663, 0.001392547106052696),
        (6, 0.2365702993157246, 0.6017546634089558, 0.001418761677877656),
        (6, 0.07714815866765733, 0.4346575516141163, 0.001338366684479554),
        (6, 0.306293666621073, 0.4908826589037616, 0.001393700862676131),
        (6, 0.3822477379524787, 0.56487681490995, 0.001415914757466932),
    ],
    974: [
        (1, 0.0, 0.0, 0.0001438294190527431),
        (3, 0.0, 0.0, 0.001125772288287004),
        (4, 0.04292963545341347, 0.0, 0.0004948029341949241),
        (4, 0.1051426854086404, 0.0, 0.000735799010912547),
        (4, 0.1750024867623087, 0.0, 0.0008889132771304384),
        (4, 0.2477653379650257, 0.0, 0.0009888347838921435),
        (4, 0.3206567123955957, 0.0, 0.001053299681709471),
        (4, 0.3916520749849983, 0.0, 0.001092778807014578),
        (4, 0.4590825874187624, 0.0, 0.001114389394063227),
        (4, 0.5214563888415861, 0.0, 0.001123724788051555),
        (4, 0.6253170244654199, 0.0, 0.001125239325243814),
        (4, 0.663792674452317, 0.0, 0.001126153271815905),
        (4, 0.6910410398498301, 0.0, 0.001130286931123841),
        (4, 0.705290700745776, 0.0, 0.001134986534363955),
        (5, 0.123668676265799, 0.0, 0.0006823367927109931),
        (5, 0.2940777114468387, 0.0, 0.0009454158160447096),
        (5, 0.4697753849207649, 0.0, 0.001074429975385679),
        (5, 0.6334563241139567, 0.0, 0.001129300086569132),
        (6, 0.05974048614181342, 0.2029128752777523, 0.0008436884500901954),
        (6, 0.1375760408473636, 0.4602621942484054, 0.001075255720448885),
        (6, 0.3391016526336286, 0.5030673999662036, 0.001108577236864462),
        (6, 0.127167519143982, 0.2817606422442134, 0.0009566475323783357),
        (6, 0.2693120740413512, 0.4331561291720157, 0.001080663250717391),
        (6, 0.1419786452601918, 0.6256167358580814, 0.001126797131196295),
        (6, 0.06709284600738255, 0.3798395216859157, 0.001022568715358061),
        (6, 0.07057738183256172, 0.551750542142352, 0.001108960267713108),
        (6, 0.2783888477882155, 0.6029619156159187, 0.001122790653435766),
        (6, 0.1979578938917407, 0.3589606329589096, 0.00103240184711746),
        (6, 0.2087307061103274, 0.5348666438135476, 0.001107249382283854),
        (6, 0.4055122137872836, 0.5674997546074373, 0.001121780048519972),
    ],
    1202: [
        (1, 0.0, 0.0, 0.0001105189233267572),
        (2, 0.0, 0.0, 0.0009205232738090741),
        (3, 0.0, 0.0, 0.0009133159786443561),
        (4, 0.03712636449657089, 0.0, 0.0003690421898017899),
        (4, 0.09140060412262223, 0.0, 0.000560399092868066),
        (4, 0.1531077852469906, 0.0, 0.0006865297629282609),
        (4, 0.2180928891660612, 0.0, 0.000772033855114563),
        (4, 0.2839874532200175, 0.0, 0.0008301545958894795),
        (4, 0.3491177600963764, 0.0, 0.0008686692550179628),
        (4, 0.4121431461444309, 0.0, 0.000892707628584689),
        (4, 0.4718993627149127, 0.0, 0.0009060820238568219),
        (4, 0.5273145452842337, 0.0, 0.0009119777254940867),
        (4, 0.6209475332444019, 0.0, 0.0009128720138604181),
        (4, 0.6569722711857291, 0.0, 0.0009130714935691735),
        (4, 0.6841788309070143, 0.0, 0.0009152873784554116),
        (4, 0.7012604330123631, 0.0, 0.0009187436274321654),
        (5, 0.1072382215478166, 0.0, 0.0005176977312965694),
        (5, 0.2582068959496968, 0.0, 0.0007331143682101417),
        (5, 0.4172752955306717, 0.0, 0.0008463232836379928),
        (5, 0.5700366911792503, 0.0, 0.0009031122694253992),
        (6, 0.9827986018263947, 0.1771774022615325, 0.0006485778453163257),
        (6, 0.9624249230326228, 0.2475716463426288, 0.0007435030910982369),
        (6, 0.9402007994128811, 0.3354616289066489, 0.0007998527891839054),
        (6, 0.9320822040143202, 0.3173615246611977, 0.0008101731497468018),
        (6, 0.9043674199393299, 0.4090268427085357, 0.000848338957459433),
        (6, 0.8912407560074747, 0.3854291150669224, 0.0008556299257311812),
        (6, 0.8676435628462708, 0.4932221184851285, 0.000880320867973826),
        (6, 0.8581979986041619, 0.4785320675922435, 0.000881104818242572),
        (6, 0.8396753624049856, 0.4507422593157064, 0.0008850282341265444),
        (6, 0.8165288564022188, 0.56321230207621, 0.0009021342299040653),
        (6, 0.8015469370783529, 0.54343035696939, 0.0009010091677105086),
        (6, 0.777356306907035, 0.5123518486419871, 0.0009022692938426915),
        (6, 0.7661621213900394, 0.6394279634749102, 0.0009158016174693465),
        (6, 0.755358414353351, 0.6269805509024392, 0.0009131578003189435),
        (6, 0.7344305757559503, 0.603116169309631, 0.0009107813579482705),
        (6, 0.7043837184021765, 0.5693702498468441, 0.0009105760258970126),
    ],
    1454: [
        (1, 0.0, 0.0, 7.777160743261247e-05),
        (3, 0.0, 0.0, 0.0007557646413004701),
        (4, 0.03229290663413854, 0.0, 0.0002841633806090617),
        (4, 0.08036733271462222, 0.0, 0.0004374419127053555),
        (4, 0.1354289960531653, 0.0, 0.0005417174740872172),
        (4, 0.1938963861114426, 0.0, 0.0006148000891358593),
        (4, 0.2537343715011275, 0.0, 0.0006664394485800704),
        (4, 0.313525143475257, 0.0, 0.000702503935692322),
        (4, 0.3721558339375338, 0.0, 0.0007268511789249627),
        (4, 0.4286809575195696, 0.0, 0.0007422637534208629),
        (4, 0.4822510128282994, 0.0, 0.0007509545035841214),
        (4, 0.5320679333566263, 0.0, 0.0007548535057718401),
        (4, 0.6172998195394274, 0.0, 0.0007554088969774001),
        (4, 0.6510679849127481, 0.0, 0.0007553147174442808),
        (4, 0.677731525168736, 0.0, 0.0007564767653292297),
        (4, 0.6963109410648741, 0.0, 0.000758799180851873),
        (4, 0.7058935009831749, 0.0, 0.0007608261832033027),
        (5, 0.9955546194091857, 0.0, 0.0004021680447874916),
        (5, 0.9734115901794209, 0.0, 0.0005804871793945964),
        (5, 0.9275693732388626, 0.0, 0.0006792151955945159),
        (5, 0.8568022422795103, 0.0, 0.0007336741211286294),
        (5, 0.7623495553719372, 0.0, 0.0007581866300989608),
        (6, 0.5707522908892223, 0.4387028039889501, 0.0007538257859800743),
        (6, 0.5196463388403083, 0.3858908414762617, 0.0007483517247053123),
        (6, 0.4646337531215351, 0.3301937372343854, 0.0007371763661112059),
        (6, 0.4063901697557691, 0.2725423573563777, 0.0007183448895756934),
        (6, 0.3456329466643087, 0.213951023749525, 0.0006895815529822191),
        (6, 0.2831395121050332, 0.1555922309786647, 0.0006480105801792886),
        (6, 0.219768202292533, 0.09892878979686097, 0.0005897558896594636),
        (6, 0.1564696098650355, 0.0459864291067551, 0.0005095708849247346),
        (6, 0.6027356673721295, 0.3376625140173426, 0.0007536906428909755),
        (6, 0.5496032320255096, 0.2822301309727988, 0.0007472505965575118),
        (6, 0.4921707755234567, 0.224863234259254, 0.0007343017132279698),
        (6, 0.4309422998598483, 0.1666224723456479, 0.0007130871582177445),
        (6, 0.3664108182313672, 0.1086964901822169, 0.0006817022032112776),
        (6, 0.2990189057758436, 0.05251989784120085, 0.0006380941145604121),
        (6, 0.6268724013144998, 0.2297523657550023, 0.000755038137792031),
        (6, 0.5707324144834607, 0.17230806070938, 0.0007478646640144802),
        (6, 0.5096360901960365, 0.1140238465390513, 0.000733591872060122),
        (6, 0.4438729938312456, 0.05611522095882537, 0.0007110120527658118),
        (6, 0.6419978471082389, 0.1164174423140873, 0.0007571363978689501),
        (6, 0.5817218061802611, 0.05797589531445219, 0.0007489908329079233),
    ],
    1730: [
        (1, 0.0, 0.0, 6.309049437420976e-05),
        (2, 0.0, 0.0, 0.0006398287705571748),
        (3, 0.0, 0.0, 0.000635718507353072),
        (4, 0.02860923126194662, 0.0, 0.0002221207162188168),
        (4, 0.07142556767711522, 0.0, 0.0003475784022286848),
        (4, 0.1209199540995559, 0.0, 0.0004350742443589804),
        (4, 0.1738673106594379, 0.0, 0.0004978569136522127),
        (4, 0.2284645438467734, 0.0, 0.0005435036221998053),
        (4, 0.2834807671701512, 0.0, 0.0005765913388219542),
        (4, 0.3379680145467339, 0.0, 0.0006001200359226003),
        (4, 0.3911355454819537, 0.0, 0.0006162178172717512),
        (4, 0.4422860353001403, 0.0, 0.0006265218152438484),
        (4, 0.4907781568726057, 0.0, 0.0006323987160974212),
        (4, 0.5360006153211468, 0.0, 0.0006350767851540569),
        (4, 0.6142105973596603, 0.0, 0.0006354362775297107),
        (4, 0.6459300387977503, 0.0, 0.0006352302462706236),
        (4, 0.6718056125089225, 0.0, 0.0006358117881417972),
        (4, 0.6910888533186254, 0.0, 0.0006373101590310116),
        (4, 0.7030467416823252, 0.0, 0.0006390428961368665),
        (5, 0.08354951166354646, 0.0, 0.0003186913449946576),
        (5, 0.2050143009099486, 0.0, 0.0004678028558591711),
        (5, 0.3370208290706637, 0.0, 0.0005538829697598626),
        (5, 0.4689051484233963, 0.0, 0.0006044475907190476),
        (5, 0.5939400424557334, 0.0, 0.0006313575103509012),
        (6, 0.1394983311832261, 0.04097581162050343, 0.000407862643185563),
        (6, 0.1967999180485014, 0.08851987391293348, 0.0004759933057812725),
        (6, 0.2546183732548967, 0.1397680182969819, 0.000526815118641344),
        (6, 0.3121281074713875, 0.1929452542226526, 0.0005643048560507316),
        (6, 0.3685981078502492, 0.2467898337061562, 0.0005914501076613073),
        (6, 0.4233760321547856, 0.3003104124785409, 0.0006104561257874195),
        (6, 0.4758671236059246, 0.3526684328175033, 0.0006230252860707806),
        (6, 0.5255178579796463, 0.4031134861145713, 0.0006305618761760796),
        (6, 0.5718025633734589, 0.4509426448342351, 0.0006343092767597889),
        (6, 0.2686927772723415, 0.04711322502423248, 0.0005176268945737827),
        (6, 0.3306006819904809, 0.09784487303942695, 0.0005564840313313692),
        (6, 0.3904906850594983, 0.1505395810025273, 0.000585642667103898),
        (6, 0.447995795190439, 0.203972815629605, 0.0006066386925777091),
        (6, 0.502707684891978, 0.2571529941121107, 0.0006208824962234458),
        (6, 0.5542087392260217, 0.309219137581567, 0.0006296314297822907),
        (6, 0.6020850887375186, 0.3593807506130276, 0.0006340423756791859),
        (6, 0.4019851409179594, 0.05063389934378671, 0.0005829627677107342),
        (6, 0.46356145674498, 0.1032422269160612, 0.000604869337608111),
        (6, 0.5215860931591575, 0.1566322094006254, 0.0006202362317732461),
        (6, 0.5758202499099271, 0.2098082827491099, 0.0006299005328403779),
        (6, 0.6259893683876795, 0.2618824114553391, 0.0006347722390609352),
        (6, 0.5313795124811891, 0.05263245019338556, 0.0006203778981238834),
        (6, 0.5893317955931995, 0.1061059730982005, 0.0006308414671239979),
        (6, 0.64262463212158, 0.1594171564034221, 0.0006362706466959498),
        (6, 0.6511904367376113, 0.0535478953656554, 0.0006375414170333233),
    ],
    2030: [
        (1, 0.0, 0.0, 4.656031899197431e-05),
        (3, 0.0, 0.0, 0.0005421549195295507),
        (4, 0.02540835336814348, 0.0, 0.0001778522133346553),
        (4, 0.06399322800504915, 0.0, 0.0002811325405682796),
        (4, 0.1088269469804125, 0.0, 0.0003548896312631459),
        (4, 0.1570670798818287, 0.0, 0.0004090310897173364),
        (4, 0.2071163932282514, 0.0, 0.0004493286134169965),
        (4, 0.2578914044450844, 0.0, 0.0004793728447962723),
        (4, 0.3085687558169623, 0.0, 0.0005015415319164265),
        (4, 0.3584719706267024, 0.0, 0.0005175127372677937),
        (4, 0.4070135594428709, 0.0, 0.0005285522262081019),
        (4, 0.4536618626222638, 0.0, 0.0005356832703713962),
        (4, 0.4979195686463577, 0.0, 0.000539791473617517),
        (4, 0.5393075111126999, 0.0, 0.000541689944159993),
        (4, 0.6115617676843916, 0.0, 0.0005419308476889938),
        (4, 0.6414308435160159, 0.0, 0.0005416936902030596),
        (4, 0.6664099412721607, 0.0, 0.0005419544338703164),
        (4, 0.6859161771214913, 0.0, 0.0005428983656630974),
        (4, 0.699362559350389, 0.0, 0.0005442286500098193),
        (4, 0.706239338771938, 0.0, 0.0005452250345057301),
        (5, 0.07479028168349763, 0.0, 0.000256800249772853),
        (5, 0.1848951153969366, 0.0, 0.0003827211700292145),
        (5, 0.3059529066581305, 0.0, 0.0004579491561917824),
        (5, 0.4285556101021362, 0.0, 0.0005042003969083574),
        (5, 0.5468758653496526, 0.0, 0.0005312708889976024),
        (5, 0.6565821978343439, 0.0, 0.0005438401790747117),
        (6, 0.1253901572367117, 0.03681917226439641, 0.0003316041873197344),
        (6, 0.1775721510383941, 0.07982487607213301, 0.0003899113567153771),
        (6, 0.2305693358216114, 0.1264640966592335, 0.0004343343327201309),
        (6, 0.2836502845992063, 0.1751585683418957, 0.0004679415262318919),
        (6, 0.336179474623259, 0.224799590763267, 0.0004930847981631031),
        (6, 0.3875979172264824, 0.2745299257422246, 0.0005115031867540091),
        (6, 0.4374019316999074, 0.3236373482441118, 0.0005245217148457367),
        (6, 0.4851275843340022, 0.3714967859436741, 0.0005332041499895321),
        (6, 0.5303391803806868, 0.4175353646321745, 0.0005384583126021542),
        (6, 0.5726197380596287, 0.4612084406355461, 0.0005411067210798852),
        (6, 0.2431520732564863, 0.04258040133043952, 0.0004259797391468714),
        (6, 0.3002096800895869, 0.08869424306722722, 0.0004604931368460021),
        (6, 0.3558554457457432, 0.1368811706510655, 0.0004871814878255202),
        (6, 0.4097782537048887, 0.1860739985015033, 0.0005072242910074885),
        (6, 0.4616337666067458, 0.2354235077395853, 0.000521706984523535),
        (6, 0.5110707008417874, 0.2842074921347011, 0.000531578596628031),
        (6, 0.5577415286163795, 0.3317784414984102, 0.0005376833708758905),
        (6, 0.601306043136695, 0.37752990020407, 0.0005408032092069521),
        (6, 0.3661596767261781, 0.04599367887164592, 0.0004842744917904866),
        (6, 0.4237633153506581, 0.09404893773654421, 0.000504892607618813),
        (6, 0.4786328454658452, 0.1431377109091971, 0.0005202607980478373),
        (6, 0.5305702076789774, 0.192418638884357, 0.0005309932388325743),
        (6, 0.5793436224231788, 0.241159094477519, 0.0005377419770895208),
        (6, 0.6247069017094747, 0.2886871491583605, 0.0005411696331677717),
        (6, 0.4874315552535204, 0.04804978774953206, 0.000519799629328242),
        (6, 0.5427337322059053, 0.09716857199366664, 0.0005311120836622945),
        (6, 0.59434937472467, 0.1465205839795055, 0.0005384309319956951),
        (6, 0.6421314033564943, 0.1953579449803574, 0.0005421859504051886),
        (6, 0.602062837471398, 0.04916375015738108, 0.0005390948355046314),
        (6, 0.6529222529856881, 0.09861621540127005, 0.0005433312705027845),
    ],
}
