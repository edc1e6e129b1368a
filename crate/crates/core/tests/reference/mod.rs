// Generated with mpmath at 40 digits.
pub const TABLE: &[(i32, f64, Option<f64>, Option<f64>)] = &[
    (0, 1e-8, Some(1.0), Some(-11.80077387717953)),
    (0, 1e-3, Some(0.9999997500000156), Some(-4.471416611375923)),
    (0, 0.1, Some(0.99750156206604), Some(-1.5342386513503667)),
    (0, 0.5, Some(0.9384698072408129), Some(-0.44451873350670656)),
    (0, 1.0, Some(0.7651976865579666), Some(0.08825696421567696)),
    (0, 2.5, Some(-0.048383776468198), Some(0.4980703596152319)),
    (0, 4.0, Some(-0.39714980986384735), Some(-0.016940739325064992)),
    (0, 7.5, Some(0.2663396578803784), Some(0.11731328614820863)),
    (0, 10.0, Some(-0.24593576445134835), Some(0.055671167283599395)),
    (0, 12.5, Some(0.1468840547004211), Some(-0.1712143068446693)),
    (0, 17.0, Some(-0.16985425215118355), Some(-0.0926371984423237)),
    (0, 20.0, Some(0.16702466434058316), Some(0.06264059680938383)),
    (0, 24.9, Some(0.08324596835301568), Some(-0.1364991839967651)),
    (0, 25.1, Some(0.1082756714999493), Some(-0.11676770763803711)),
    (0, 30.0, Some(-0.08636798358104021), Some(-0.11729573168666403)),
    (0, 50.0, Some(0.055812327669251816), Some(-0.09806499547007708)),
    (0, 75.0, Some(0.03464391380509706), Some(-0.08536904764777561)),
    (0, 100.0, Some(0.019985850304223122), Some(-0.07724431336508315)),
    (0, 150.0, Some(-0.0007740903753942912), Some(-0.06514222150903735)),
    (0, 200.0, Some(-0.015437439930565091), Some(-0.05426577524981791)),
    (1, 1e-8, Some(5e-09), Some(-63661977.236758195)),
    (1, 1e-3, Some(0.0004999999375000026), Some(-636.6221672311394)),
    (1, 0.1, Some(0.049937526036242), Some(-6.4589510947020266)),
    (1, 0.5, Some(0.2422684576748739), Some(-1.471472392670243)),
    (1, 1.0, Some(0.4400505857449335), Some(-0.7812128213002887)),
    (1, 2.5, Some(0.49709410246427405), Some(0.1459181379667858)),
    (1, 4.0, Some(-0.06604332802354913), Some(0.3979257105571)),
    (1, 7.5, Some(0.1352484275797055), Some(-0.25912851048611624)),
    (1, 10.0, Some(0.04347274616886144), Some(0.24901542420695388)),
    (1, 12.5, Some(-0.16548380461475973), Some(-0.1538382565375012)),
    (1, 17.0, Some(-0.09766849275778065), Some(0.1672050360772337)),
    (1, 20.0, Some(0.06683312417585005), Some(-0.1655116143625213)),
    (1, 24.9, Some(-0.13485569953140875), Some(-0.08600255759555445)),
    (1, 25.1, Some(-0.11463478413442273), Some(-0.11062223322783082)),
    (1, 30.0, Some(-0.11875106261662294), Some(0.08442557066174723)),
    (1, 50.0, Some(-0.09751182812517514), Some(-0.05679566856201477)),
    (1, 75.0, Some(-0.08513999504482911), Some(-0.035213785160580484)),
    (1, 100.0, Some(-0.07714535201411216), Some(-0.020372312002759792)),
    (1, 150.0, Some(-0.06514516365772736), Some(0.00055695634956084)),
    (1, 200.0, Some(-0.05430453818237822), Some(0.01530182458038999)),
    (2, 1e-8, Some(1.25e-17), Some(-1.2732395447351628e+16)),
    (2, 1e-3, Some(1.2499998958333365e-07), Some(-1273239.8630456675)),
    (2, 0.1, Some(0.0012489586587999188), Some(-127.64478324269017)),
    (2, 0.5, Some(0.03060402345868264), Some(-5.441370837174266)),
    (2, 1.0, Some(0.11490348493190047), Some(-1.6506826068162543)),
    (2, 2.5, Some(0.44605905843961724), Some(-0.38133584924180325)),
    (2, 4.0, Some(0.3641281458520728), Some(0.215903594603615)),
    (2, 7.5, Some(-0.23027341052579026), Some(-0.18641422227783963)),
    (2, 10.0, Some(0.2546303136851206), Some(-0.0058680824422086145)),
    (2, 12.5, Some(-0.17336146343878267), Some(0.1466001857986691)),
    (2, 17.0, Some(0.15836384123850347), Some(0.11230837915729236)),
    (2, 20.0, Some(-0.16034135192299814), Some(-0.07919175824563596)),
    (2, 24.9, Some(-0.09407775144790795), Some(0.12959134804531497)),
    (2, 25.1, Some(-0.11740991724771206), Some(0.10795318706211433)),
    (2, 30.0, Some(0.07845124607326535), Some(0.12292410306411385)),
    (2, 50.0, Some(-0.05971280079425882), Some(0.0957931687275965)),
    (2, 75.0, Some(-0.036914313672959165), Some(0.08443001337682679)),
    (2, 100.0, Some(-0.021528757344505364), Some(0.07683686712502795)),
    (2, 150.0, Some(-9.451180670874022e-05), Some(0.06514964759369817)),
    (2, 200.0, Some(0.01489439454874131), Some(0.05441879349562181)),
    (3, 1e-8, Some(2.0833333333333335e-26), Some(-5.092958178940651e+24)),
    (3, 1e-3, Some(2.0833332031250032e-11), Some(-5092958815.560503)),
    (3, 0.1, Some(2.0820315754756262e-05), Some(-5099.332378612905)),
    (3, 0.5, Some(0.002563729994587244), Some(-42.059494304723884)),
    (3, 1.0, Some(0.019563353982668407), Some(-5.821517605964729)),
    (3, 2.5, Some(0.21660039103911352), Some(-0.756055496753671)),
    (3, 4.0, Some(0.43017147387562193), Some(-0.182022115953485)),
    (3, 7.5, Some(-0.2580609131934603), Some(0.15970759193793513)),
    (3, 10.0, Some(0.058379379305186815), Some(-0.2513626571838373)),
    (3, 12.5, Some(0.11000813631434926), Some(0.2007503159930753)),
    (3, 17.0, Some(0.13493057304919323), Some(-0.14077953509904725)),
    (3, 20.0, Some(-0.09890139456044968), Some(0.1496732627133941)),
    (3, 24.9, Some(0.11974280773254803), Some(0.10682044483174961)),
    (3, 25.1, Some(0.09592404034992678), Some(0.12782592837717174)),
    (3, 30.0, Some(0.129211228759725), Some(-0.06803569025319872)),
    (3, 50.0, Some(0.09273480406163444), Some(0.06445912206022249)),
    (3, 75.0, Some(0.08317123164893794), Some(0.039716719207344583)),
    (3, 100.0, Some(0.07628420172033194), Some(0.02344578668776091)),
    (3, 150.0, Some(0.06514264334288179), Some(0.0011803675862711112)),
    (3, 200.0, Some(0.05460242607335305), Some(-0.014213448710477554)),
    (5, 1e-8, Some(2.6041666666666667e-44), Some(-2.4446199258915125e+42)),
    (5, 1e-3, Some(2.604166558159724e-19), Some(-2.444620078680264e+17)),
    (5, 0.1, Some(2.603081790964441e-09), Some(-24461484.502303917)),
    (5, 0.5, Some(8.053627241357474e-06), Some(-7946.301478807473)),
    (5, 1.0, Some(0.00024975773021123444), Some(-260.4058666258122)),
    (5, 2.5, Some(0.01950162513450322), Some(-3.8301760007407517)),
    (5, 4.0, Some(0.13208665604709827), Some(-0.7958514211142)),
    (5, 7.5, Some(0.28347390516255044), Some(0.1754180569454651)),
    (5, 10.0, Some(-0.23406152818679363), Some(0.13540304768936232)),
    (5, 12.5, Some(0.03473769976223973), Some(-0.2329039378311508)),
    (5, 17.0, Some(-0.18704411942315585), Some(0.06454646502933781)),
    (5, 20.0, Some(0.15116976798239498), Some(-0.10003576788953243)),
    (5, 24.9, Some(-0.08024676273394225), Some(-0.14018638276614223)),
    (5, 25.1, Some(-0.05119417047462787), Some(-0.15249435491003363)),
    (5, 30.0, Some(-0.14324029551207706), Some(0.03162735928926443)),
    (5, 50.0, Some(-0.08140024769656964), Some(-0.07854841391308165)),
    (5, 75.0, Some(-0.07852397701375137), Some(-0.0483836712969701)),
    (5, 100.0, Some(-0.07419573696451393), Some(-0.029480196281661895)),
    (5, 150.0, Some(-0.06499863174072584), Some(-0.004652497340417635)),
    (5, 200.0, Some(-0.055132678944014676), Some(0.012019640832200107)),
    (10, 1e-8, Some(2.6911444554673723e-90), Some(-1.1828049049433494e+88)),
    (10, 1e-3, Some(2.6911443943049986e-40), Some(-1.1828049377990416e+38)),
    (10, 0.1, Some(2.6905328954342157e-20), Some(-1.1831335132045197e+18)),
    (10, 0.5, Some(2.6131773608228033e-13), Some(-121963623349.56963)),
    (10, 1.0, Some(2.6306151236874534e-10), Some(-121618014.27868919)),
    (10, 2.5, Some(2.2247284173983834e-06), Some(-14782.847716021068)),
    (10, 4.0, Some(0.0001950405546600345), Some(-178.3305559079643)),
    (10, 7.5, Some(0.03899825788941221), Some(-1.2769419280524374)),
    (10, 10.0, Some(0.20748610663335887), Some(-0.35981415218340274)),
    (10, 12.5, Some(0.2788717465935357), Some(0.06406153638227449)),
    (10, 17.0, Some(-0.19911331972770593), Some(-0.08063695847632883)),
    (10, 20.0, Some(0.1864825580239451), Some(-0.0438946535156584)),
    (10, 24.9, Some(-0.08868880155802548), Some(-0.14154908531382968)),
    (10, 25.1, Some(-0.06109503451421192), Some(-0.15461319280028604)),
    (10, 30.0, Some(-0.12987689399858876), Some(0.07505670212239711)),
    (10, 50.0, Some(-0.11384784914946938), Some(0.005723897182053513)),
    (10, 75.0, Some(-0.08041786789189445), Some(0.04579833506132499)),
    (10, 100.0, Some(-0.05473217693547201), Some(0.058331574236414926)),
    (10, 150.0, Some(-0.020612788945218587), Some(0.06187635520812076)),
    (10, 200.0, Some(0.0015301688136801642), Some(0.05643344451799607)),
    (20, 1e-8, Some(3.919904349624791e-185), Some(-4.0601741495842745e+182)),
    (20, 1e-3, Some(3.9199043029592635e-85), Some(-4.0601742030076185e+82)),
    (20, 0.1, Some(3.9194377208586175e-45), Some(-4.060708420126372e+42)),
    (20, 0.5, Some(3.7272019617047145e-31), Some(-4.271430121565906e+28)),
    (20, 1.0, Some(3.8735030085246576e-25), Some(-4.113970314835505e+22)),
    (20, 2.5, Some(3.309079383658777e-17), Some(-484776559582090.1)),
    (20, 4.0, Some(3.559511628593853e-13), Some(-45637199262.22011)),
    (20, 7.5, Some(6.29609082847652e-08), Some(-272761.75448916876)),
    (20, 10.0, Some(1.1513369247813398e-05), Some(-1597.483848269626)),
    (20, 12.5, Some(0.00048433775975865437), Some(-42.20205232174814)),
    (20, 17.0, Some(0.036185363108591745), Some(-0.8666744124870303)),
    (20, 20.0, Some(0.16474777377532654), Some(-0.28548945860020347)),
    (20, 24.9, Some(0.06422099357756944), Some(0.1955667586086055)),
    (20, 25.1, Some(0.039629272494917336), Some(0.1997935382606892)),
    (20, 30.0, Some(0.0048310199934040645), Some(-0.16848153948742678)),
    (20, 50.0, Some(-0.11670435275957974), Some(0.01644263394811578)),
    (20, 75.0, Some(0.006896104722152191), Some(0.09359119826506371)),
    (20, 100.0, Some(0.062217458498338755), Some(0.051247973076188426)),
    (20, 150.0, Some(0.06344724095386198), Some(-0.016024629052560344)),
    (20, 200.0, Some(0.03745093871086004), Some(-0.042385742893228676)),
    (33, 1e-8, None, None),
    (33, 1e-3, Some(1.3406779077012338e-146), Some(-7.194684178657962e+143)),
    (33, 0.1, Some(1.340579341821122e-80), Some(-7.195246229811893e+77)),
    (33, 0.5, Some(1.55788803851474e-57), Some(-6.192269455627312e+54)),
    (33, 1.0, Some(1.330855117212922e-47), Some(-7.25111987014582e+44)),
    (33, 2.5, Some(1.7352946622749628e-34), Some(-5.5746032974452035e+31)),
    (33, 4.0, Some(8.792744502046716e-28), Some(-1.105169497389423e+25)),
    (33, 7.5, Some(6.662584434353753e-19), Some(-1.4866955819521596e+16)),
    (33, 10.0, Some(6.37589265666125e-15), Some(-1587581567912.1094)),
    (33, 12.5, Some(6.574087921927945e-12), Some(-1585547724.1826715)),
    (33, 17.0, Some(6.008528535776308e-08), Some(-187361.59763748114)),
    (33, 20.0, Some(5.289242572700931e-06), Some(-2294.3977061722417)),
    (33, 24.9, Some(0.0011593946499989267), Some(-12.730902389717993)),
    (33, 25.1, Some(0.0013841155471731867), Some(-10.783911805595988)),
    (33, 30.0, Some(0.04180810947010724), Some(-0.5750113047243861)),
    (33, 50.0, Some(-0.09922011372951545), Some(0.08420563708784153)),
    (33, 75.0, Some(-0.008235864561131259), Some(-0.09687050007588184)),
    (33, 100.0, Some(-0.07067793956587766), Some(0.04181444318347167)),
    (33, 150.0, Some(0.058158388262573656), Some(0.031117415358372445)),
    (33, 200.0, Some(0.04381195567732605), Some(-0.03616399441707089)),
    (40, 1e-8, None, None),
    (40, 1e-3, Some(1.1146925604908655e-180), Some(-7.138961395399327e+177)),
    (40, 0.1, Some(1.1146246002516398e-100), Some(-7.139418990418113e+97)),
    (40, 0.5, Some(1.0122626959003595e-72), Some(-7.861960484882533e+69)),
    (40, 1.0, Some(1.1079158511286327e-60), Some(-7.184874796801384e+57)),
    (40, 2.5, Some(8.87558684058155e-45), Some(-8.983456891531374e+41)),
    (40, 4.0, Some(1.2221800915971504e-36), Some(-6.543931381688345e+33)),
    (40, 7.5, Some(7.943888545605348e-26), Some(-1.0198442776460203e+23)),
    (40, 10.0, Some(6.030895312346907e-21), Some(-1.3628032972693373e+18)),
    (40, 12.5, Some(3.1985013987128434e-17), Some(-261924481821414.56)),
    (40, 17.0, Some(3.039451753901375e-12), Some(-2892679034.5356402)),
    (40, 20.0, Some(9.902389413744687e-10), Some(-9281227.196058271)),
    (40, 24.9, Some(1.4755652248990822e-06), Some(-6895.021198980767)),
    (40, 25.1, Some(1.8988933788997428e-06), Some(-5385.5913516042665)),
    (40, 30.0, Some(0.0003612023608896585), Some(-33.393668907330316)),
    (40, 50.0, Some(-0.13817628120116143), Some(-0.04530801119560901)),
    (40, 75.0, Some(-0.09467448452026421), Some(-0.032710519118196724)),
    (40, 100.0, Some(0.07270175482281106), Some(0.040746852168803444)),
    (40, 150.0, Some(-0.05317802974343399), Some(-0.03969444543117614)),
    (40, 200.0, Some(-0.03193299329798661), Some(0.047212363855706124)),
    (64, 1e-8, None, None),
    (64, 1e-3, None, Some(-1.1641441896043843e+298)),
    (64, 0.1, Some(4.272151806789138e-173), Some(-1.1641903821139689e+170)),
    (64, 0.5, Some(2.313801316194194e-128), Some(-2.1495984822959257e+125)),
    (64, 1.0, Some(4.255915220948966e-109), Some(-1.1687731312529765e+106)),
    (64, 2.5, Some(1.2256945693538278e-83), Some(-4.0608744834256867e+80)),
    (64, 4.0, Some(1.3669874770314137e-70), Some(-3.6454883907284386e+67)),
    (64, 7.5, Some(3.4711360312336805e-53), Some(-1.4427863023287288e+50)),
    (64, 10.0, Some(2.9049360287291094e-45), Some(-1.733413671038701e+42)),
    (64, 12.5, Some(3.7214076175199535e-39), Some(-1.362733235782724e+36)),
    (64, 17.0, Some(7.807312299968273e-31), Some(-6.607875932767391e+27)),
    (64, 20.0, Some(1.6611215152065e-26), Some(-3.1520272678769904e+23)),
    (64, 24.9, Some(8.553004546037874e-21), Some(-6.312564168418356e+17)),
    (64, 25.1, Some(1.37125646708192e-20), Some(-3.943045378809751e+17)),
    (64, 30.0, Some(4.1750753524406154e-16), Some(-13486781885522.074)),
    (64, 50.0, Some(6.358383300675205e-05), Some(-125.49935873796302)),
    (64, 75.0, Some(-0.1271305889653358), Some(-0.0073314692710625545)),
    (64, 100.0, Some(0.03998506945291834), Some(0.08176274673907619)),
    (64, 150.0, Some(0.06589734771526445), Some(-0.01871284174089311)),
    (64, 200.0, Some(-0.03405976496301458), Some(0.04690069754858026)),
];
pub const JNP_ROOTS: &[(i32, u32, f64)] = &[
    (0, 1, 3.8317059702075125),
    (0, 2, 7.015586669815619),
    (0, 3, 10.173468135062722),
    (0, 5, 16.470630050877634),
    (0, 10, 32.189679910974405),
    (1, 1, 1.8411837813406593),
    (1, 2, 5.3314427735250325),
    (1, 3, 8.536316366346286),
    (1, 5, 14.863588633909034),
    (1, 10, 30.601922972669094),
    (2, 1, 3.0542369282271404),
    (2, 2, 6.706133194158459),
    (2, 3, 9.969467823087596),
    (2, 5, 16.347522318321783),
    (2, 10, 32.127327020443474),
    (3, 1, 4.201188941210528),
    (3, 2, 8.015236598375953),
    (3, 3, 11.345924310743007),
    (3, 5, 17.78874786606647),
    (3, 10, 33.62694918279668),
    (5, 1, 6.415616375700241),
    (5, 2, 10.519860873772307),
    (5, 3, 13.9871886301403),
    (5, 5, 20.57551452138689),
    (5, 10, 36.56077768688036),
    (10, 1, 11.770876674955582),
    (10, 2, 16.447852748486497),
    (10, 3, 20.223031412681703),
    (10, 5, 27.182021527190532),
    (10, 10, 43.60676490137951),
    (20, 1, 22.2191464829013),
    (20, 2, 27.71212684307483),
    (20, 3, 31.973715219698164),
    (20, 5, 39.58453089075877),
    (20, 10, 56.916347865130675),
    (40, 1, 42.78537226039299),
    (40, 2, 49.38585711835219),
    (40, 3, 54.35202076655492),
    (40, 5, 62.9783494823672),
    (40, 10, 81.90834899895088),
    (64, 1, 67.25180159764986),
    (64, 2, 74.79951687758752),
    (64, 3, 80.38950113935272),
    (64, 5, 89.95159472252975),
    (64, 10, 110.46454033675919),
];
