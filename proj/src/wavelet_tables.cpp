/*
Copyright 2026 The wavesr Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Generated coefficient tables. Lowpass taps for the orthogonal families are
// the standard published scaling filters; the highpass is the alternating
// flip dec_hi[k] = (-1)^k dec_lo[L-1-k].

#include "wavelet_tables.hpp"

namespace wavesr::detail {

const std::vector<BankEntry>& bank_entries() {
  static const std::vector<BankEntry> entries = {
      {"haar", true, SymmetricExtension::half_sample, 0, 0, 0, 0,
       {
       0.7071067811865476, 0.7071067811865476},
       {}, {}, {}},
      {"db2", true, SymmetricExtension::half_sample, 0, 2, 0, 2,
       {
       0.48296291314453416, 0.8365163037378079, 0.2241438680420134,
       -0.12940952255126037},
       {}, {}, {}},
      {"db3", true, SymmetricExtension::half_sample, 1, 3, 1, 3,
       {
       0.33267055295008263, 0.8068915093110925, 0.45987750211849154,
       -0.13501102001025458, -0.08544127388202666, 0.03522629188570953},
       {}, {}, {}},
      {"db4", true, SymmetricExtension::half_sample, 1, 5, 1, 5,
       {
       0.2303778133088965, 0.7148465705529157, 0.6308807679298589,
       -0.027983769416859854, -0.18703481171909309, 0.030841381835560764,
       0.0328830116668852, -0.010597401785069032},
       {}, {}, {}},
      {"db5", true, SymmetricExtension::half_sample, 1, 7, 1, 7,
       {
       0.16010239797419293, 0.6038292697971896, 0.7243085284377729,
       0.13842814590132074, -0.24229488706638203, -0.032244869584638375,
       0.07757149384004572, -0.006241490212798274, -0.012580751999081999,
       0.0033357252854737712},
       {}, {}, {}},
      {"db6", true, SymmetricExtension::half_sample, 1, 9, 1, 9,
       {
       0.11154074335010947, 0.49462389039845306, 0.7511339080210954,
       0.31525035170919763, -0.22626469396543983, -0.12976686756726194,
       0.09750160558732304, 0.027522865530305727, -0.03158203931748603,
       0.0005538422011614961, 0.004777257510945511, -0.0010773010853084796},
       {}, {}, {}},
      {"db7", true, SymmetricExtension::half_sample, 2, 10, 2, 10,
       {
       0.07785205408500918, 0.3965393194819173, 0.7291320908462351,
       0.4697822874051931, -0.14390600392856498, -0.22403618499387498,
       0.07130921926683026, 0.08061260915108308, -0.03802993693501441,
       -0.01657454163066688, 0.01255099855609984, 0.0004295779729213665,
       -0.0018016407040474908, 0.00035371379997452024},
       {}, {}, {}},
      {"db8", true, SymmetricExtension::half_sample, 2, 12, 2, 12,
       {
       0.05441584224310401, 0.31287159091429995, 0.6756307362972898,
       0.5853546836542067, -0.015829105256349306, -0.2840155429615469,
       0.0004724845739132828, 0.12874742662047847, -0.017369301001807547,
       -0.044088253930794755, 0.013981027917398282, 0.008746094047405777,
       -0.004870352993451574, -0.00039174037337694705, 0.0006754494064505693,
       -0.00011747678412476953},
       {}, {}, {}},
      {"db10", true, SymmetricExtension::half_sample, 2, 16, 2, 16,
       {
       0.026670057900555554, 0.1881768000776915, 0.5272011889317256,
       0.6884590394536035, 0.2811723436605775, -0.24984642432731538,
       -0.19594627437737705, 0.12736934033579325, 0.09305736460357235,
       -0.07139414716639708, -0.029457536821875813, 0.033212674059341,
       0.0036065535669561697, -0.010733175483330575, 0.001395351747052901,
       0.001992405295185056, -0.0006858566949597116, -0.00011646685512928545,
       9.358867032006959e-05, -1.3264202894521244e-05},
       {}, {}, {}},
      {"db18", true, SymmetricExtension::half_sample, 4, 30, 4, 30,
       {
       0.0015763102184407605, 0.019288531724146376, 0.10358846582242359,
       0.3146789413370317, 0.5718268077666072, 0.5718016548886513,
       0.14722311196992816, -0.29365404073655876, -0.21648093400514298,
       0.14953397556537779, 0.1670813127632574, -0.09233188415084628,
       -0.10675224665982849, 0.06488721621190545, 0.057051247738536884,
       -0.044526141902982326, -0.023733210395860002, 0.02667070592647059,
       0.006262167954305707, -0.013051480946612001, 0.00011863003385811746,
       0.004943343605466738, -0.0011187326669924971, -0.0013405962983361066,
       0.0006284656829651457, 0.0002135815619103407, -0.00019864855231174796,
       -1.5359171235347246e-07, 3.7412378807400385e-05, -8.520602537446696e-06,
       -3.332634478885822e-06, 1.7687129836276155e-06, -7.691632689885177e-08,
       -1.1760987670282317e-07, 3.068835863045175e-08, -2.5079344549485983e-09},
       {}, {}, {}},
      {"db19", true, SymmetricExtension::half_sample, 5, 31, 5, 31,
       {
       0.0011086697631817106, 0.014281098450764397, 0.08127811326545956,
       0.26438843174089677, 0.5244363774646549, 0.6017045491275379,
       0.26089495265103885, -0.22809139421548263, -0.28583863175582624,
       0.07465226970810326, 0.21234974330627848, -0.03351854190230288,
       -0.1427856950387366, 0.027584350625628667, 0.08690675555581223,
       -0.02650123625012304, -0.04567422627723091, 0.02162376740958505,
       0.019375549889176127, -0.013988388678535142, -0.005866922281012175,
       0.007040747367105243, 0.0007689543592575484, -0.002687551800701582,
       0.00034180865345859575, 0.0007358025205054352, -0.000260676135678628,
       -0.00012460079173415878, 8.711270467219923e-05, 5.105950487073886e-06,
       -1.6640176297154945e-05, 3.0109643162965265e-06, 1.531931476691193e-06,
       -6.862755657769143e-07, 1.4470882987978445e-08, 4.6369377757826045e-08,
       -1.1164020670358259e-08, 8.666848838997619e-10},
       {}, {}, {}},
      {"db20", true, SymmetricExtension::half_sample, 5, 33, 5, 33,
       {
       0.0007799536136668463, 0.010549394624950399, 0.06342378045908152,
       0.21994211355139703, 0.4726961853109017, 0.6104932389385939,
       0.36150229873933104, -0.13921208801148388, -0.32678680043403496,
       -0.016727088309077008, 0.22829105081991632, 0.0398502464577712,
       -0.15545875070726795, -0.024716827338613585, 0.10229171917444256,
       0.005632246857307436, -0.06172289962468046, 0.005874681811811827,
       0.03229429953076958, -0.00878932492390156, -0.01381052613715192,
       0.006721627302259457, 0.004420542387045791, -0.0035814942596096226,
       -0.0008315621728225569, 0.0013925596193231364, -5.349759843997695e-05,
       -0.00038510474869921763, 0.00010153288973670291, 6.77428082837773e-05,
       -3.710586183394713e-05, -4.376143862183997e-06, 7.2412482876736205e-06,
       -1.0119940100188862e-06, -6.847079597000557e-07, 2.6339242262700013e-07,
       2.0143220235505126e-10, -1.814843248299696e-08, 4.056127055551833e-09,
       -2.9988364896193194e-10},
       {}, {}, {}},
      // sym2 and sym3 coincide with db2 and db3. The commonly published
      // symlet copies carry fewer digits (orthonormal only to ~5e-12), so the
      // Daubechies values are used.
      {"sym2", true, SymmetricExtension::half_sample, 0, 2, 0, 2,
       {
       0.48296291314453416, 0.8365163037378079, 0.2241438680420134,
       -0.12940952255126037},
       {}, {}, {}},
      {"sym3", true, SymmetricExtension::half_sample, 1, 3, 1, 3,
       {
       0.33267055295008263, 0.8068915093110925, 0.45987750211849154,
       -0.13501102001025458, -0.08544127388202666, 0.03522629188570953},
       {}, {}, {}},
      {"sym4", true, SymmetricExtension::half_sample, 4, 2, 4, 2,
       {
       0.0322231006040427, -0.012603967262037833, -0.09921954357684722,
       0.29785779560527736, 0.8037387518059161, 0.49761866763201545,
       -0.02963552764599851, -0.07576571478927333},
       {}, {}, {}},
      {"sym5", true, SymmetricExtension::half_sample, 4, 4, 4, 4,
       {
       0.019538882735286728, -0.021101834024758855, -0.17532808990845047,
       0.01660210576452232, 0.6339789634582119, 0.7234076904024206,
       0.1993975339773936, -0.039134249302383094, 0.029519490925774643,
       0.027333068345077982},
       {}, {}, {}},
      {"sym6", true, SymmetricExtension::half_sample, 6, 4, 6, 4,
       {
       -0.007800708325034148, 0.0017677118642428036, 0.04472490177066578,
       -0.021060292512300564, -0.07263752278646252, 0.3379294217276218,
       0.787641141030194, 0.4910559419267466, -0.048311742585633,
       -0.11799011114819057, 0.0034907120842174702, 0.015404109327027373},
       {}, {}, {}},
      {"sym7", true, SymmetricExtension::half_sample, 5, 7, 5, 7,
       {
       0.010268176708511255, 0.004010244871533663, -0.10780823770381774,
       -0.14004724044296152, 0.2886296317515146, 0.767764317003164,
       0.5361019170917628, 0.017441255086855827, -0.049552834937127255,
       0.0678926935013727, 0.03051551316596357, -0.01263630340325193,
       -0.0010473848886829163, 0.002681814568257878},
       {}, {}, {}},
      {"sym8", true, SymmetricExtension::half_sample, 8, 6, 8, 6,
       {
       0.0018899503327594609, -0.0003029205147213668, -0.01495225833704823,
       0.003808752013890615, 0.049137179673607506, -0.027219029917056003,
       -0.05194583810770904, 0.3644418948353314, 0.7771857517005235,
       0.4813596512583722, -0.061273359067658524, -0.1432942383508097,
       0.007607487324917605, 0.03169508781149298, -0.0005421323317911481,
       -0.0033824159510061256},
       {}, {}, {}},
      {"sym9", true, SymmetricExtension::half_sample, 8, 8, 8, 8,
       {
       0.0010694900329086053, -0.0004731544986800831, -0.010264064027633142,
       0.008859267493400484, 0.06207778930288603, -0.018233770779395985,
       -0.19155083129728512, 0.035272488035271894, 0.6173384491409358,
       0.717897082764412, 0.238760914607303, -0.05456895843083407,
       0.0005834627461258068, 0.03022487885827568, -0.01152821020767923,
       -0.013271967781817119, 0.0006197808889855868, 0.0014009155259146807},
       {}, {}, {}},
      {"sym12", true, SymmetricExtension::half_sample, 10, 12, 10, 12,
       {
       -0.0001790665869750869, -1.8158078862617515e-05, 0.002350297614183465,
       0.00030764779631059454, -0.014589836449234145, -0.0026043910313322326,
       0.05780417944550566, 0.01530174062247884, -0.17037069723886492,
       -0.07833262231634322, 0.46274103121927235, 0.7634790977836572,
       0.39888597239022, -0.022162306170337816, -0.03584883073695439,
       0.04917931829966084, 0.0075537806116804775, -0.024220722675013445,
       -0.0014089092443297553, 0.007414965517654251, 0.00018021409008538188,
       -0.0013497557555715387, -1.1353928041541452e-05, 0.00011196719424656033},
       {}, {}, {}},
      {"sym13", true, SymmetricExtension::half_sample, 12, 12, 12, 12,
       {
       7.042986690694402e-05, 3.690537342319624e-05, -0.0007213643851362283,
       0.00041326119884196064, 0.0056748537601224395, -0.0014924472742598532,
       -0.020749686325515677, 0.017618296880653084, 0.09292603089913712,
       0.008819757670420546, -0.14049009311363403, 0.11023022302137217,
       0.6445643839011856, 0.6957391505614964, 0.19770481877117801,
       -0.12436246075153011, -0.0597506277179437, 0.013862497435849205,
       -0.017211642726299048, -0.02021676813338983, 0.005296359738725025,
       0.0075262253899681, -0.0001709428585302221, -0.0011360634389281183,
       -3.573862364868901e-05, 6.820325263075319e-05},
       {}, {}, {}},
      {"sym14", true, SymmetricExtension::half_sample, 12, 14, 12, 14,
       {
       4.4618977991475265e-05, 1.9329016965523917e-05, -0.0006057601824664335,
       -7.321421356702399e-05, 0.004532677471945648, 0.0010131419871842082,
       -0.019439314263626713, -0.002365048836740385, 0.06982761636180755,
       0.02589858753104667, -0.15999741114652205, -0.05811182331771783,
       0.4753357626342066, 0.7599762419610909, 0.39320152196208885,
       -0.03531811211497973, -0.057634498351326995, 0.03743308836285345,
       0.004280520499019378, -0.029196217764038187, -0.002753774791224071,
       0.01003769371767227, 0.0003664765736601183, -0.002579441725933078,
       -6.286542481477636e-05, 0.00039843567297594335, 1.1210865808890361e-05,
       -2.5879090265397886e-05},
       {}, {}, {}},
      {"sym15", true, SymmetricExtension::half_sample, 13, 15, 13, 15,
       {
       2.866070852531808e-05, 2.171789015077892e-05, -0.00040216853760293483,
       -0.00010815440168545525, 0.003481028737064895, 0.0015261382781819983,
       -0.01717125278163873, -0.008744788886477952, 0.06796982904487918,
       0.06839331006048024, -0.1340562984562539, -0.1966263587662373,
       0.2439627054321663, 0.7218430296361812, 0.5786404152150345,
       0.11153369514261872, -0.04108266663538248, 0.04073547969681068,
       0.021937642719753955, -0.03887671687683349, -0.01940501143093447,
       0.01007997708790567, 0.003423450736351241, -0.0035901654473726417,
       -0.0002673164464718057, 0.0010705672194623959, 5.512254785558665e-05,
       -0.00016066186637495343, -7.35966679891947e-06, 9.712419737963348e-06},
       {}, {}, {}},
      {"coif1", true, SymmetricExtension::half_sample, 2, 2, 2, 2,
       {
       -0.07273261951252645, 0.3378976624574818, 0.8525720202116004,
       0.3848648468648578, -0.07273261951252645, -0.015655728135791993},
       {}, {}, {}},
      {"coif2", true, SymmetricExtension::half_sample, 4, 6, 4, 6,
       {
       0.01638733646320364, -0.04146493678687178, -0.0673725547237256,
       0.3861100668227629, 0.8127236354494135, 0.4170051844232391,
       -0.07648859907828076, -0.05943441864643109, 0.02368017194684777,
       0.005611434819368834, -0.0018232088709110323, -0.000720549445520347},
       {}, {}, {}},
      {"coif3", true, SymmetricExtension::half_sample, 6, 10, 6, 10,
       {
       -0.003793512864380802, 0.007782596425672746, 0.023452696142077168,
       -0.06577191128146936, -0.06112339000297255, 0.40517690240911824,
       0.7937772226260872, 0.42848347637737, -0.07179982161915484,
       -0.08230192710629983, 0.03455502757329774, 0.015880544863669452,
       -0.009007976136730624, -0.0025745176881367972, 0.0011175187708306303,
       0.0004662169598204029, -7.0983302506379e-05, -3.459977319727278e-05},
       {}, {}, {}},
      {"coif4", true, SymmetricExtension::half_sample, 8, 14, 8, 14,
       {
       0.000892313902537003, -0.001629492425226786, -0.007346167936268051,
       0.01606894713157503, 0.02668230466960483, -0.08126671024919373,
       -0.05607731960356926, 0.41530842700068227, 0.7822389344242826,
       0.43438603311435653, -0.06662747236681717, -0.09622042453595264,
       0.03933442260558915, 0.02508225333794961, -0.015211728187697211,
       -0.0056582838001308835, 0.0037514346971460866, 0.0012665610789256603,
       -0.0005890202246332165, -0.0002599743371222568, 6.233885431278719e-05,
       3.1229861599195265e-05, -3.259647940030751e-06, -1.7849909144933469e-06},
       {}, {}, {}},
      {"coif5", true, SymmetricExtension::half_sample, 10, 18, 10, 18,
       {
       -0.000212081862067494, 0.0003585777411617577, 0.0021782943778456947,
       -0.00415931262757864, -0.010131584846900276, 0.023408322118927783,
       0.028169744270532353, -0.09192158806008609, -0.052046670253554764,
       0.42157126673075435, 0.7742936228603274, 0.4379823066591634,
       -0.06203775157498196, -0.10556315130733723, 0.041287530472117834,
       0.032674799467057355, -0.019758391600965465, -0.009159507338676163,
       0.006761520220620417, 0.0024315754425382886, -0.0016616273039298788,
       -0.0006375589261258812, 0.0003018579416682448, 0.00014035632812373243,
       -4.12198619242655e-05, -2.1270221672515614e-05, 3.7007277113394796e-06,
       2.0612203985788783e-06, -1.6237995172048338e-07, -9.604010112767894e-08},
       {}, {}, {}},
      {"bior2.6", false, SymmetricExtension::whole_sample, 5, 1, 0, 6,
       {
       -0.006905339660024878, 0.013810679320049757, 0.04695630968816917,
       -0.1077232986963881, -0.16987135563661201, 0.4474660099696121,
       0.966747552403483, 0.4474660099696121, -0.16987135563661201,
       -0.1077232986963881, 0.04695630968816917, 0.013810679320049757,
       -0.006905339660024878},
       {
       0.3535533905932738, -0.7071067811865476, 0.3535533905932738},
       {
       0.3535533905932738, 0.7071067811865476, 0.3535533905932738},
       {
       0.006905339660024878, 0.013810679320049757, -0.04695630968816917,
       -0.1077232986963881, 0.16987135563661201, 0.4474660099696121,
       -0.966747552403483, 0.4474660099696121, 0.16987135563661201,
       -0.1077232986963881, -0.04695630968816917, 0.013810679320049757,
       0.006905339660024878}},
      {"rbio2.6", false, SymmetricExtension::whole_sample, 0, 6, 5, 1,
       {
       0.3535533905932738, 0.7071067811865476, 0.3535533905932738},
       {
       0.006905339660024878, 0.013810679320049757, -0.04695630968816917,
       -0.1077232986963881, 0.16987135563661201, 0.4474660099696121,
       -0.966747552403483, 0.4474660099696121, 0.16987135563661201,
       -0.1077232986963881, -0.04695630968816917, 0.013810679320049757,
       0.006905339660024878},
       {
       -0.006905339660024878, 0.013810679320049757, 0.04695630968816917,
       -0.1077232986963881, -0.16987135563661201, 0.4474660099696121,
       0.966747552403483, 0.4474660099696121, -0.16987135563661201,
       -0.1077232986963881, 0.04695630968816917, 0.013810679320049757,
       -0.006905339660024878},
       {
       0.3535533905932738, -0.7071067811865476, 0.3535533905932738}},
      {"rbio2.8", false, SymmetricExtension::whole_sample, 0, 8, 7, 1,
       {
       0.3535533905932738, 0.7071067811865476, 0.3535533905932738},
       {
       -0.0015105430506304422, -0.0030210861012608843, 0.012947511862546647,
       0.02891610982635418, -0.05299848189069094, -0.13491307360773605,
       0.16382918343409023, 0.46257144047591653, -0.9516421218971786,
       0.46257144047591653, 0.16382918343409023, -0.13491307360773605,
       -0.05299848189069094, 0.02891610982635418, 0.012947511862546647,
       -0.0030210861012608843, -0.0015105430506304422},
       {
       0.0015105430506304422, -0.0030210861012608843, -0.012947511862546647,
       0.02891610982635418, 0.05299848189069094, -0.13491307360773605,
       -0.16382918343409023, 0.46257144047591653, 0.9516421218971786,
       0.46257144047591653, -0.16382918343409023, -0.13491307360773605,
       0.05299848189069094, 0.02891610982635418, -0.012947511862546647,
       -0.0030210861012608843, 0.0015105430506304422},
       {
       0.3535533905932738, -0.7071067811865476, 0.3535533905932738}},
      {"rbio3.1", false, SymmetricExtension::half_sample, 1, 1, 1, 1,
       {
       0.1767766952966369, 0.5303300858899106, 0.5303300858899106,
       0.1767766952966369},
       {
       -0.3535533905932738, -1.0606601717798212, 1.0606601717798212,
       0.3535533905932738},
       {
       -0.3535533905932738, 1.0606601717798212, 1.0606601717798212,
       -0.3535533905932738},
       {
       0.1767766952966369, -0.5303300858899106, 0.5303300858899106,
       -0.1767766952966369}},
      {"rbio3.3", false, SymmetricExtension::half_sample, 1, 3, 3, 1,
       {
       0.1767766952966369, 0.5303300858899106, 0.5303300858899106,
       0.1767766952966369},
       {
       0.06629126073623882, 0.1988737822087165, -0.15467960838455727,
       -0.9943689110435825, 0.9943689110435825, 0.15467960838455727,
       -0.1988737822087165, -0.06629126073623882},
       {
       0.06629126073623882, -0.1988737822087165, -0.15467960838455727,
       0.9943689110435825, 0.9943689110435825, -0.15467960838455727,
       -0.1988737822087165, 0.06629126073623882},
       {
       0.1767766952966369, -0.5303300858899106, 0.5303300858899106,
       -0.1767766952966369}},
      {"rbio3.5", false, SymmetricExtension::half_sample, 1, 5, 5, 1,
       {
       0.1767766952966369, 0.5303300858899106, 0.5303300858899106,
       0.1767766952966369},
       {
       -0.013810679320049757, -0.04143203796014927, 0.052480581416189075,
       0.26792717880896527, -0.07181553246425873, -0.966747552403483,
       0.966747552403483, 0.07181553246425873, -0.26792717880896527,
       -0.052480581416189075, 0.04143203796014927, 0.013810679320049757},
       {
       -0.013810679320049757, 0.04143203796014927, 0.052480581416189075,
       -0.26792717880896527, -0.07181553246425873, 0.966747552403483,
       0.966747552403483, -0.07181553246425873, -0.26792717880896527,
       0.052480581416189075, 0.04143203796014927, -0.013810679320049757},
       {
       0.1767766952966369, -0.5303300858899106, 0.5303300858899106,
       -0.1767766952966369}},
  };
  return entries;
}

}  // namespace wavesr::detail
