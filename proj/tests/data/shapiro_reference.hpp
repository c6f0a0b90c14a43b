// Generated by make_shapiro_reference.py (scipy.stats.shapiro). Do not edit.
#pragma once

#include <vector>

namespace xnb::testing {

struct ShapiroReference {
    const char* name;
    std::vector<double> values;
    double w;
    double p;
};

inline const std::vector<ShapiroReference>& shapiro_reference_cases() {
    static const std::vector<ShapiroReference> cases = {
        {"n3", {-0.21118912055729136, -0.5177334709845255, 0.1495958369624623}, 0.9978026861148986, 0.9104415429203921},
        {"n5_uniform", {0.1124812376026858, 0.7860251925366624, 0.5199421137002211, 0.9362641121324758, 0.6444869489314018}, 0.9504356385689564, 0.7403005709721425},
        {"n8_normal", {-1.9514738484064804, -0.15841288562715672, -0.7312848653804448, 0.40969535789355127, 0.44244173776631784, -0.9278626907702291, -0.9331679527718499, -1.4700371639889616}, 0.9427295143631351, 0.6381204257372185},
        {"n11_exponential", {0.8166859134688385, 0.2822025615914604, 1.0972885881497993, 0.20975296881733999, 0.23557573302130996, 2.383644836729516, 0.9201259299200595, 0.4749030148730063, 1.1276053614498072, 1.0521298981148945, 0.7774659474559955}, 0.8447880204990277, 0.03648454838830039},
        {"n12_normal", {0.2024703525539789, 1.3688252896097017, -0.4082144474715901, 0.7559450824466323, 0.22516072407457527, 1.6965558201068938, -1.9620539547190585, 0.8742582951813314, -1.0236516100709405, -0.8686467389750054, -0.018363115062379937, -1.5105593611064696}, 0.9762548028348255, 0.9641726410210961},
        {"n20_normal", {6.416256920264324, 8.483374375242235, 9.032548505119014, 4.288963215730673, 7.379106285287921, 9.5622592992813, 9.604217245688133, 8.013075528332752, 9.98773363268111, 8.459876718742649, 13.520496334689799, 7.572594453976265, 10.177311396396938, 8.531214981159144, 12.563687359393258, 7.085354465293382, 12.629807898595116, 6.4140946210010075, 5.899009308635359, 8.3545912791689}, 0.9611905542956892, 0.5679000551586862},
        {"n50_uniform", {0.7563730044069352, 0.09212663115467812, 0.780394387310383, 0.5012152826106315, 0.38067930157820473, 0.7262341904668148, 0.5556558237234082, 0.7976414569677964, 0.8281364782631699, 0.2911130809738871, 0.7161059411238341, 0.21808916445811377, 0.5024526445425455, 0.3226309751624855, 0.4391799612650491, 0.7753304344741002, 0.4262863300109232, 0.982697767073773, 0.18458051571721767, 0.35110630251460817, 0.10130088798358339, 0.014876380258532773, 0.5449547581914534, 0.5278206963001444, 0.4397322774821457, 0.29829152704026773, 0.024256149180875042, 0.12410611317243359, 0.5618515784882837, 0.22565847207346845, 0.24510683586283188, 0.811621176799208, 0.6449805191653848, 0.4104836588886557, 0.6969202097457012, 0.5628890263345468, 0.10938250001196603, 0.8679937625380166, 0.5154799925248431, 0.3433810030427691, 0.4909371857795921, 0.3947185617986245, 0.5628321448327348, 0.1047263512063612, 0.4008025763192903, 0.6036277713423741, 0.6775531874330737, 0.13806713753664945, 0.6855648688622642, 0.7658900115864739}, 0.9715981604854081, 0.2685068206481377},
        {"n200_normal", {1.2383313599650503, -0.456354677083108, 0.05006772266326947, 1.4001149565290263, -1.2583110321903825, 0.19252723035005864, 0.9752574099039509, -1.0635333890782235, -0.6997189554259344, -1.2499109994493884, 1.180755855958985, -0.18937950941760334, -0.3151526950576845, -1.4125440998120293, -1.0637880888392612, 0.9265324028169399, -0.1894662559146825, -0.4008865295361959, 0.7918978444233291, -0.9058702327124593, 1.6133774967039864, -0.36821453798861686, -0.5130431413146951, -0.2651651322617833, 0.03734160322850226, 0.7011685358520778, -0.6988357023991144, -0.8240273035749163, 0.038157318143834086, 0.338946480595799, 0.8772554573332024, -0.47675317335829226, 0.9670117114464462, -1.0198929249926405, 1.3857781904896354, -1.0920718843489277, -0.08626421702236128, 0.19529433290442091, 1.013168409695103, 1.460167546575992, 0.049231054948360456, 1.8956444686047453, -0.8195254055421561, 0.327085780475411, -0.23690062022112027, 0.5724267033297068, -0.9518576569589675, -1.0978371256871218, 1.2831606687353896, 1.0640303528956363, 0.5611182293510114, -0.7022128648311302, 0.5920709367367252, 0.44715755163459925, 1.233463002510945, 0.23291628084796767, -1.614519078535772, -0.21626000057556494, -0.027445090253328065, 0.7922051499984665, -0.24777281185006933, -1.0582170477267128, 1.150391898846106, 0.385598921102513, -1.0974238644553607, -0.6638390469431474, 0.9191455884612612, -1.3493675504328448, 0.9679760019194605, 0.022872029582339172, -0.15221941895025928, 0.866086228617757, -0.42415673418334754, 0.05577984128625503, 1.6350017254802929, -0.8448702963902519, 1.821685117550148, -1.6861164261567418, -0.8564476431024972, 0.9009172850167928, -0.6628436994512616, -0.3183351971264662, 0.7895819149304028, 0.9578053716306554, 0.49003261762081796, -0.5413385746061977, 0.6282667782911593, 0.15386473052703528, 1.1791813981571897, 0.38987011754980094, -0.7959286119942333, -0.12538861553305775, -1.5523210846844009, 0.6292646780231136, 0.4470382367293309, 0.018769946434862173, -1.3455809447893392, -0.38893067579372054, 0.6822024238885163, -0.18430308846802088, 0.12010392825599683, 1.1451759055115893, 0.6334814483210189, -1.5987440216266622, 0.36664372663918865, -0.9358610099570726, -2.224898799501235, 1.1599732627456971, -1.4855979833528146, -0.31553986195829725, 1.248970900024312, 0.7030184833835583, -0.062049360408464566, -0.8878619705323729, 0.2961226469452628, -0.06827054695613029, 0.8214052379813731, 0.3882476766366309, 0.7291209900281715, -1.5036159537660332, -0.8590636124412238, 0.1597087582213239, 0.3688819559704258, -0.6242540257262359, -0.7018203149793166, -0.027076745823721857, 0.12492334143804794, 1.9640224680002618, -0.3839497234399529, 0.5374641051200776, -1.7128285074415992, -0.10039957815337086, -0.32124156177765695, -1.2884422140339447, -0.9706107733530734, -0.645344254451187, -0.7819498769887497, -1.8978734842594804, -0.32371034455099806, -0.09892637966939825, -0.3061516201188416, 0.8143385780887049, -0.17103626392813376, 0.09928257456339362, -0.03590167573689501, 0.11688604904624468, -1.059698555864337, -0.28704239066016546, 1.7920603835063502, 0.3263675799066463, -0.16389169423044558, -0.45005920295810453, 0.3783701711191025, 0.005672209793634918, 0.21630585450979514, 0.8751591100876378, 0.144387939309942, -0.09012281505737861, -0.6137381354673066, -1.3258723666881693, 0.4267405017311268, 0.3581254480412572, -0.6598440421299452, -0.5586169936597816, -1.093405474806862, -0.9894196144989964, -0.3479788820664245, -0.06012042750126488, 0.8732174075665686, 0.5613303996435267, -0.5457805445492988, 0.8097528238742074, -1.9486359745985573, -0.3929869104035927, 0.4826859939822945, 1.4741208618445958, -1.6445230276621392, -1.2079064814818765, -0.4991405569808023, -1.5713257032487187, -0.04745187076638793, 0.25963026908314096, -0.2690300925532661, -0.8837856311005597, 1.8751841695015485, 1.5750578559633508, 0.3046682601289299, 1.4664767952041904, -0.7931273699000598, -1.3299786745392952, 0.25262467493712804, 1.803245001202149, -0.2284099467575461, 0.7539653386670736, 1.2587701061125052, 0.04446466447040762, 0.8410133212594327, -0.6608060441848072, 1.2900759480879924, 0.42109296809531144}, 0.9920171019766083, 0.3438249466439764},
        {"n200_exponential", {0.2747170514601746, 1.436802032611703, 2.226245508397333, 4.739554988992606, 0.007092161754758936, 0.03439024226726678, 0.17902411860242667, 0.5611277041944829, 0.12067927801222836, 0.18650168840111, 1.9358478774727734, 1.4970777459325604, 0.5990449994510219, 0.48621088693426173, 0.3194196024241351, 0.3996056059854702, 1.6402654509047958, 0.08791352687810945, 2.782503504756405, 0.1388996899139539, 2.292483479001884, 0.3969934950669885, 2.3512700886936435, 1.1065089392650616, 0.1061789413720874, 0.951162050611048, 0.3179714205198159, 0.19358034218670023, 1.35099340658331, 0.5403486090082138, 0.046118502962445775, 0.29384923123435236, 1.243560467702533, 3.708513631909372, 1.5160646823606194, 2.444085244198693, 0.965215675856294, 1.7278762342043952, 1.292737152799633, 0.2797870411412901, 0.37920525270527583, 4.3842063978464125, 1.762342535110354, 0.07749926712218945, 3.095225258375195, 0.7236117588384137, 0.18812822066193424, 0.0746950141610734, 1.614780792248719, 0.7647313082557688, 0.12674810045192003, 2.188656614530677, 1.7572666890062192, 1.9475148321071984, 0.6807399782590455, 0.43955835209903593, 0.11457850908138427, 0.09586226913679192, 0.18468992528066647, 0.7414388167918888, 1.2083614121423532, 1.1685631789976314, 4.765705034828032, 0.3959476094423438, 0.3572151505616834, 0.09950419819082491, 1.0676611969530092, 1.5966848297391798, 5.286522457275903, 0.25973096809221813, 0.37402411060532076, 0.8287687779479105, 0.28602692290099285, 0.07397796506293647, 0.11863222159487363, 0.3221299620234053, 0.16146936702512446, 0.02194388932347962, 0.12058683065043208, 5.0248298340800766, 1.2947427015995887, 0.7501508273150415, 1.8970377747321772, 0.95080000511882, 0.7172976292696631, 3.011992755940263, 0.28870886935722545, 0.8204002518158773, 0.11864768757576984, 0.002313511047538696, 0.18236766357995585, 0.5116608052516995, 2.2232801162847706, 0.1850645182628026, 0.12336374411254994, 0.7137568045827812, 1.454469088767973, 0.29874151342065247, 0.2351610393557955, 0.17899683038376413, 0.2033840489389301, 0.8816571628406167, 3.421555624883591, 0.08495493492231598, 2.194808777560346, 1.5626367978795115, 1.5366293254617853, 0.9116716494540653, 0.28705665287609883, 1.2973373833887603, 1.2384676366301388, 0.24740344658202293, 3.666716874498003, 0.07872115516182558, 1.7568984139787296, 0.5233947930944991, 0.2435569472775588, 0.06486972257888074, 3.033371328341113, 0.02023613677421836, 0.6021929486434888, 0.6646197024338845, 1.7529439804391775, 0.3145138737919006, 1.1049479303766794, 1.036432241690657, 0.18952155658503325, 0.9261048631774517, 1.4066433787622403, 2.6033867597296485, 0.30381196888133377, 2.009352025838168, 1.5952929590770621, 0.25535339078401725, 0.32254248378781647, 0.0762256454283796, 1.0730290801694253, 0.01836339850071866, 0.3764687050489278, 0.4111878189853771, 0.3075010144998203, 0.17718014798853135, 0.9911169157500062, 0.6301802620715375, 1.643754811623702, 1.9705808467447956, 0.24967679630056433, 0.43443849815904456, 1.3411820570831545, 0.7239151361421876, 1.267756051901654, 2.298007604919246, 0.12372942114280386, 0.6855904321835273, 0.5465741659642979, 1.4102995988945473, 1.2379673469419645, 0.6348072364818265, 1.2981206169697554, 0.5263213710541081, 0.7607115788307969, 0.42032427820776486, 1.3659664990822584, 0.01607786547705813, 0.2364581777496262, 0.15845490886540875, 0.5818901980373383, 0.4318041057721079, 0.1435386044875612, 5.256024969895037, 0.41279507211980904, 3.4586001072741173, 0.9185670947441191, 4.712462578789046, 1.0223680000948492, 1.3985523995566285, 0.5225025565063384, 1.8184131505695211, 1.6446818261771814, 0.3328607740349124, 0.0963760928210908, 3.9506889662270757, 2.5192740997769048, 1.8437982527785137, 2.548513413699482, 0.4560939177187408, 1.0781058227891132, 1.3217045101406593, 0.8412724529685375, 0.8169082141878037, 1.5257942404218932, 0.5173318659530226, 0.7677789190351522, 0.8646731061508172, 0.5565583316896338, 0.20984457045646376, 2.0432922565068723, 1.9030732045408079, 0.1042056323928686, 0.30741808592574554}, 0.8034412416717175, 3.826597730059095e-15},
    };
    return cases;
}

}  // namespace xnb::testing
