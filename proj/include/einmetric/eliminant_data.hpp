#pragma once

// Reference univariate elimination polynomials for the metric systems, one per
// group case (plus a second branch polynomial for the split E6 case).  Each is
// stored as space-separated integer coefficients from the leading power down to
// the constant term; parse with eliminant() below.

#include <string>
#include <vector>

#include "types.hpp"

namespace einmetric::fixtures {

struct EliminantData {
    const char* variable;
    int degree;
    const char* coefficients;  // degree+1 integers, highest power first
};

inline std::vector<Int> eliminant(const EliminantData& e) {
    std::vector<Int> out;
    out.reserve(e.degree + 1);
    std::string token;
    for (const char* p = e.coefficients;; ++p) {
        if (*p == ' ' || *p == '\0') {
            out.emplace_back(token);
            token.clear();
            if (*p == '\0') break;
        } else {
            token += *p;
        }
    }
    require(static_cast<int>(out.size()) == e.degree + 1,
            "eliminant coefficient count mismatch");
    return out;
}

inline const EliminantData g2_2_h1{"x1", 39,
    "578531204393508729 -2907419178698478477 9728488450924774839 -25248552448377295323 56466222208555751172 -112561770533625695268 198560662542278445420 -303749957092666314564 403108239570614919684 -461651040693288248940 457287888650310982692 -385901524001421918252 263698285244084996724 -121027010977188296460 -3723246665533789740 82231517231748069876 -102191761959692380074 82264683344411071386 -47064365277272324622 17165576727452434302 -1543691819299617324 -4724193236441019084 4420128602614576596 -3155137453029513948 1592256867663356196 -768600370620963068 294461889742168084 -112323449859022284 34778832154783148 -10968398600557556 2775906314750316 -734820705350612 149714619756553 -33449638312869 5237027887391 -997188227243 107164942344 -17880627984 968584320 -150264576"};

inline const EliminantData e8_8_k1{"x1", 49,
    "78627620134518984869670299619225 -1879012156849489779707699697741525 24958517859683233851773742581453130 -226345877119100379348478414653942870 1513185548162200779194248616933419791 -7767087422550952023317555159123235339 30802377992721718905775487881405527156 -91469740820715969757364654368958734704 190873255583958103333447847157388070763 -251450263614444457947297352429222170207 174697300086572957060190519165619552914 -348342277415980322916046484535937167846 3002677791406351946122412362593386235357 -14163273159456167553892516550563377195873 44027812533760332962711411379822436468296 -103359433218793762175332925928788224767564 195341684679658672333566251584926273888618 -305149823721731252899197653136452852072562 393503106465236359948116939782270035587444 -405394724912565051721521587945499542805996 272987735753676571252110160502472211820742 67527266567097795889985999048107668548322 -648798451413297437284550685137354441143464 1406965042656066428973970557643766067268176 -2175743101927487127818021138090846891067546 2652679256280234163460510381340166807164594 -2558905970930356615952062891716100348759020 1819840234201169247432197581725018033034180 -573110366219719484295636119428516440072790 -898192008904623391867803363166579084394930 2196777571676601155406190148800336652452480 -3047573028495615879932513597313365789288840 3388852959467640315510569932345608419421165 -3273630300427318361235238941319922925655545 2823340833679036161326179394502997732627650 -2191869205433840326556829886605796355495550 1538080739419688790208901918515707596638875 -976760862170802820093764370749377583728775 563675702099787379912980508814827349226900 -295654068049591813276291328141962741142400 141495683505513028215917983599798929865375 -61509598161488435381920159529683875449475 24312853879710780673048343979366706124250 -8664729466196887937652173231674074174750 2770234999000558646762022239898046895625 -786852533021232630512967801167059768125 194733271361911111513857132379687575000 -41207441950449158811069657833488687500 6741277041530521149993243000562500000 -859782169024171126981444722656250000"};

inline const EliminantData f4_2_h1{"x3", 101,
    "63459125312728809061842327355883965092426940416 -920983389392901147130377725860474388294846644224 9284030996847000229461748615161458859581745659904 -72231264824781521074460759465312440396973648904192 474090092783696430917122803302705511377312635944960 -2716426925303009081280894916587505354693138471452672 13928981666688388147256261223934160302674603191304192 -64892996424133928137698638603811273070013563879292928 277731488039641471269947873533553174033919791213838336 -1100681274916513923824472334739425330176822351407087616 4063212316482458197610601184936117632052406776092426240 -14035457932119745594854722553431991322029237116190326784 45521154694910054415489734540334666446613275447418421248 -138989344903939502760451623904236457989017703097989857280 400294158959755643083550785378988938431734533883781709824 -1089022114669507770392870584714647593690007896934880641024 2801397856363975282367542926720029558144403125321202401280 -6817885379922156536111652515165617977589266615874129231872 15701952412543110505856916943820752724521223983962586152960 -34216393233291025770029652161256199220193387714745792659456 70516001329117409764548923930872952867194021910385077846016 -137327646289169111738793490244260987895509460573594545225728 252415013953372334056500075226916999570602665659035875999744 -437145843020198931924876541636921539338330946745999868755968 711698478115149919191326763960685722556799467931964286992384 -1085854704561151226820526323366031976152058255866699795660800 1545872987530402035886865292388450940956043862142555058380800 -2040770782009497991746315379021685834308361348137207206174720 2474617817759971607277241788391185316015028171144823683063808 -2713416472372073086525101694784351591143139473401445118681088 2613262983470191771589830160198704851628875439784801973596160 -2069290218418158264029847032239247119549407157373813654286336 1073308692563330553384597653734241243314674928772408635447296 243383268162901260317977997414016371083655623812595679834112 -1609375404546416218236600482252912174118464079287975942948352 2672694963662822735196784395673190550399134349252116960776704 -3114412610690042189775494926465007145115374286782216606602752 2780945528894563748863142343650355721268277028914024232564224 -1777803153232519896953172291143481639817296527070092107145472 471376850935213838891432653962426924940360769359294745810432 623750383609419878697829019463867520660227080289808518313920 -1040603038326989861022950362038120196827146648905065209736576 564965083609062720849342591878835952132818055988824262111376 649619372601281147814040345731771930965779727246024293143504 -2118012753182384601180559819198400780972530222436309420548080 3205388926087602866149736984715502422941036840916282804140976 -3399079409763580385139579223928130084953706063347065837023000 2526218612878420387036879439950686812518557153001711837979064 -834433401752454857645647262023568632488618740772182979146772 -1101385395838477492629746207491960938518647539595102389316872 2631037139614283301382941342160092654160835574746224378985565 -3282383226236719186391399204082397795775877578301500715196503 2937659835203687649893255383322025931399696823727244558286097 -1851035734616115365629019524331368234044251593409402913444411 498022109054373150395850625480317180124853810659501884348651 627355526093354022331902293368985581146006710909004658401207 -1207045734980737886266791122600422887565869937071216149025129 1182073307241943169778530232935546805223288647965360710571511 -718203246621926363352199146463822746343025839992293567678988 96644002741648960970123374601314631036176300051445193949656 422104069724220785760650059880175853561682549627138288223924 -683397637477216946107242310612442756271548207816068470401088 666605501872783619736009469651934045513775273586944371856186 -452558710835995517519348198954994152927678719275198879680886 162700999764271444384776912405378431410116935139824677075998 93939119293706672636919053860282946725625620077832878556914 -255147629760439396399382896402394067054928161056011639874616 308396407398907558760838372721158434444550638676652132806780 -277614375770280461907766589637738690110973121068605430180588 201477143418161317806510553487993326097416754880917183892864 -115969901716816418101426110321015198051414624540044967024168 44725833423519690527789412859895224361666978693724364777728 2520894187976416901089600003713269486821645786597713677964 -26486403386554915622730996860937772397953223304069070744920 33294891175701376903563757255573808063712434139603578954691 -30202076884961887362828779340403368100144991071060222187421 23099423829744618419506899206593906790694209676039929614503 -15680468836461732445911867905683122953673941068247037316197 9671984604335042749855869480653845526481625108821701237745 -5490069835615675038150115079186954852016192157885614205023 2889374986224761685442552566105705408525169491706393088757 -1416494130573647866724791573304034482931984659037915662955 648751477566144492286603717146642412127675425476232549029 -278070848833909095692181583970081277475757069716551459039 111644780007072437002497603341623817366814844891773288945 -41997637999280362408255038869439084693844361764781722551 14796365048687965062327228402196888338897351487134760371 -4877819943619247140179803803393490676071239723633511361 1502397252705966074311686966159213579712203646293106491 -431425769917898886316566505773997593134379146416278993 115173309907631982466727249550402897704325044395195191 -28477674526413418871108871989347987750566901612750701 6490427377397192429051997305835939685976063245759899 -1355038458126617854787910001663192486402952805121845 257038525794588371891326953346269064271241145105863 -43821959983623391384006935940560441466837308645513 6615718858884967733806801498204423491247659359667 -865800811288635528014727851709253657063913408253 95113645509127999488018808217880353172800724072 -8317620756384461283345771094408286533995673140 522260976842192193467930459675557760528309268 -17941225061011393318805831702298275346720564"};

inline const EliminantData e7_5_h1{"x3", 101,
    "14076250334540985180649862434416588395833969116210937500000000000000 -171879184796389482519846089317782509140670299530029296875000000000000 1453131958104205245005551853895702815127745270729064941406250000000000 -9473331387374978930557135592382675403647411614656448364257812500000000 52228429032726008904356963394477081755739115923643112182617187500000000 -251543951003390645154109483342302454413619741813838481903076171875000000 1085613000952484788032182156567205573264792393599331378936767578125000000 -4258882459359618640576916999859198229608694138852670788764953613281250000 15353381792201093169261442745728599974469277102204543948173522949218750000 -51247671437974200029279926242190350750941601745823506236076354980468750000 159277968193531827733770928938696792394519161440710672831535339355468750000 -462926508346144498742728870248893592374879475272611933228969573974609375000 1262177999422453138852307438542980370000112170664719322771072387695312500000 -3236435366700326861977880348547854838802610550418218812595033645629882812500 7818839674582226915745074206106944841667485955194252036326932907104492187500 -17823026475683574989920756727849914992828758644347139452949285984039306640625 38374562464573820491352405963633381848692969526613948014654363346099853515625 -78111515156680952208568322815283640971150078626459790696200255393981933593750 150418212866249392746430136136477190312182131346708641783848342323303222656250 -274226797799220136068829653849816447018158152571233876100911887187957763671875 473666436371352173985976176338257382301103274684463812827026091655731201171875 -775937848157366756906063084448422279134097874371188256677871034072875976562500 1207150400502827505609484743337103792488617773663813184312931088278198242187500 -1786917539761664393734512028432217575971928747001709362696207536544036865234375 2523283328042500705555771937323177208536480253814622741933239530885467529296875 -3410040133101191376307418153187605141034005485155297795948203643118286132812500 4427227829007830039323985782362477540309186880924655617991484124562622070312500 -5543315902885880050459899218485938422135193995167025320528375071687469482421875 6716145578402019256272307762678559235656688619049543258249088075475286865234375 -7889325415521622316319117014762959306907667871100870016410896831429394531250000 8987871554017934014648949314880532895050225239219525645069037648161762695312500 -9917208157477374337767877875545519619987011928976120543819610153102255859375000 10577799203698319620387455592337741027001238708759415658121587619127446289062500 -10887319782215050901949644489831112625025397307880553428016972363473247070312500 10808272718671764880409307324632946987250904801571361749421569584932820507812500 -10351925750612475241625493181878415851036122298454696642632323147793814306640625 9570049235629322030129441573282410555362644512739858159923675452999522548828125 -8527728410757032303006877739950121077903047743081938287293482897667003828125000 7293671555087344683446136873087134513658482869052893430821710819055271882812500 -5938364201902229269149097008903216497897458637908470944612521462398610144531250 4542803163100520326399144842143300663460846346791886417852196110264118186718750 -3203367797363298249711802033233747850433277119218375865387587239202504776562500 2014757550707134984844606694758564217815440179528736200907390078758647693437500 -1059435189706540868544396172374688428356034633803064566575279632528066663046875 373453746953392113493477521723258123175987786047445920972626980195467362484375 44530362210518073353216396492748240313013722867507760033999699035992575625000 -245551311625611100016210619803011492135965095443877459657793044352671972512500 289708058711370824511848194485259992761349222486398117737364263666816009706250 -251021510422094576034704205162129823203080952220679044063099876553064746298750 176974180980720883702202869219411157489456320399570126363647370079444394210000 -107293425749110552425481777607895918800703150070799670761477099264571385035000 52661105129970562594028210108639606728701622938738221071821689744328675071625 -20209976916043807751745039654358855823532177997588147118317671488142414778125 2385419029486295607532750803216893332123501222180408286275540947211555452000 3587821317546678618380217860464824345029642368821605269921381443889756146300 -5067035401021094823238464500969069646022963960363015867883320197337727649300 3717083826554658487879634379063790156238599455962131271814245768935578843000 -2427908795670998175497265078142249597119437614024384136832425990803168150860 1195740741369749034292959741455193545682210186321696447733419655241996493300 -547903002336498666464976405918498018000843427855146404566963006900577627145 168574323027718935579747256538556505399257352625388808341195401828470961037 -31656492709267343933346707272620048507992779716620141360266989747001709088 -19141463779266076060464696963922265617567912033126227666771741940037097492 22057805196225616222038220769784003421664886692244997020731817495990602040 -16111103356817483342224330398745646301705527199879085417642376254012031316 8787371168033807690276772563251134119884622902813540153994393586109768596 -4203136839615520864011534300079602987537250849136320058974663974205829364 1703272099354575963895402631669026840927858600614506299961357771268340029 -588970874392788182709636324404656170014408669935999543313372542768494777 153806609923832326823604769432015034921034937840431892763207363982129000 -15378470715780405849560366161840779036747529936249773865278808437342372 -15211919485197391079635722664817141582826291606688169501432074860152694 14602884726425854387595532983100243969072684905051532652335375162018618 -8742436435221198517785178525746417053733167289492701877870544777319580 4322817710270412971587127477714461997494242365934113140183874504735076 -1894810327329607561294394972277312203013169914051239516934551367169545 759207200812335120180804124931553087396041536632050200202305980399381 -282425511639204787872546053183174770397888747384260698976130175319380 98377870025599081710637608493372281528211731859183399640998528484952 -32273084568675355240409087819690258656183993127476521438269949061881 10001895483152732684019494369595395225750217998389286530858888305093 -2934440317716499911008283722824705734798918191533548524562464809626 815886497078810400694413343083008136001965170879611485375752520798 -215013629240317734592312901320891652601683163107174766915835738002 53694155253757070364771839375415493996163225978928643803111746886 -12693754793801484385740806712618680578641191192421808450522707324 2836871266322051379178111812447045352149407143579909976950226088 -598220909132580616232973267331034636299134258811161962399579373 118729056990130109140794450645759854158605184235508731658294357 -22112260233460135927357201183413456647262866287675952659637328 3850068285596588964841282201703973992205738072480521413341576 -623837287469755356862826730619025821947727433644178976756360 93548438364841392807693982392282073170403921008788886330336 -12891115269601460910598971287468238872883412219299739419408 1617872450840116983877791561306647646149713087425933514704 -182775085352679354205708790407982060766987938597053694592 18291418108089247071802150845244940952239814288051333120 -1584767080810168250170572570688441271916400990819270656 114880970013053787307549156392012937701059689924067328 -6569798492576356809368814625199214133359843746512896 263729603959951432986035759935455148324708203626496 -5546140081463900301505979788442876096704520650752"};

inline const EliminantData e8_2_h1{"x3", 101,
    "4300817068102634554892991062842129042773576732311618329635448320000000000 -48434234613549258526882893300617941462391685037263593180733084672000000000 384412414000835153497962732335882305935605918425027227535381768849920000000 -2343356739326681041821514580356528768679045141260294555070279790135552000000 12118750392476326222236533006962244871827435009196838279324500368662097280000 -54694072490084700582663695979794196000771759437095459232706976031069894016000 221353224406881636197442133058784492973200290115121516088278948796937464371200 -813886740762282999039919900837623187565903920555774696522128146040136921808640 2749311143142358208694757864933801593004701230356043145755440407202107969205248 -8592602645047256285489822902989371514808504859611203756617492188201050618429696 24987213573707362099498581598734764124216513406921443771718443643063519416173424 -67886371151784002113561327332159978566678061704085234326096771582310691912274832 172855472915888793901915966837849077301067956523296460430225355574530069733610000 -413520597399357357100869381565342441018263038178115494696023037473035005867485760 931201134042478123783110021283671383867077991181025700457605569636368192762700536 -1977180680461234875709924061155165455728674465172548132743172377066740066067927072 3963718711108383180414158119936397189175742439421867408680408165110894988557985004 -7513418122634704515990854605187661012865820116011720424270638810049480025748301056 13485034115259604979202660060065426293023734909520325939447188838010611615994227899 -22953711751263858356155615317993870971118178202495574682769731600848840969284513211 37118739850644510331943371356546784531091762451361904566881906562825838499125532570 -57143381922307096358894776517481035852112895921488424717999575316225143862664779938 83933828799625827613068937568371537392889738211567188929892877463435790674461594289 -117916849189812448657352362010079618375373892675617348197030706818467434459065258729 158840601295945663967771914515932889808801662497376498082318501776572544579687584532 -205640403374951186570968875180984604118953468621671855171500403944532124984014864228 256373362974138627914650186250703319027584745315995489017313493311167581918499221209 -308180457016417463546322721674440420609583883456596081505287450408132053995421688417 357437554714305319709984089082160479773294679519620215685747593181661184213216972570 -399909639063653725636419295835615541787351965342966672935569109836991011645113298530 431447528558011049848674754343083702264157712308167972064641240229606934035503112751 -448435605178939066244729947066284792252456509588375968250745873651107135576456816847 448909425142372532200712964875932843329902983017003297057000758414145225424316299356 -432505986718923727726733642983121597245375455185536827443718365457823110316105606920 400926851409634138076302850835949788171629035117892773365279927750703254819903773328 -356896733431404331148195671666424421693848148003049729639070229457919596548217497480 304117822268847097534981499298924198481044422812969119854167753513347346281757734984 -246800083651937571501758366885734742867433138789154590922218902161270727737822408680 189342447332993406197869816861229081733498325675444469649008978221731371770480267524 -136571233453352364375287398041234776929197601714558372362384908184149357492228993124 91614174252541036183261171953169851489145245846377901063718187242760215516142261424 -57099174743574573249126209346809266661445782155473938421471474074519986140555333552 32358254824131527171676058875969221067276651159847698655117241266482730946477408340 -16824644814321478644964952093517021134010663065144141852879740223864734400865575220 7514287187418446688509325329918072893001195320661832719856558857169013514235203720 -2984410089768692604131117349590773663180032424321033953036482267179033266809725640 732445676639314254349675396500675892268684514864442230285668149583939903578943676 -67917208841309119819997191749712546424834785848702592652838825458694211721954412 -201226807780484731518790106748244287589322324607269243036806074712412930566274184 129154056812060487385840015218861595472761603600998499969817431810471728718352640 -107834101343192331330480731011834920513318003452547815351643422543284825020233542 39139302564982238988531563687231140402316126213769637000710966449760382422072550 -25014007394124148943263880664666605315368407336198528031642273872797438993869524 5149637394602359328977892265587734288759270529004199895668361076640377995064036 -3349820696141993438064008629889341109854136879528713117453652408803499479096386 -85257700269450629092725979032910336876774470641715409238975393462391067569870 -172220176540080050421320403630494784694130728150815944148121248793493036348296 -181152831869469320750602320397679974645876788987125838360682382259389590194584 29933044025820518391774124363260016171392605814344766308091877183115582225214 -40721449677473162458230185588830044223400555655697639872956766127283187956142 7974104969338520813563262017073690821078239472420921364391270897806684138700 -5189717122288769398584568108177516806684072008723652373050127514128137067260 817800735737374024438923649637174077182654957307312155831702991153313172306 -369906466718587873259473075984672842769304229881787413153149704347082720882 12420361539059598078858560583923436698430183398779246053297377510620249848 -185006606576738833950603767371099558647439473457636904506936645730880144 -8953116075124778902766759252670482762033989180259875789742764174595473548 3507574455024951317268532533764032607025789087442517730121154962348230396 -1506654748146747600991905293586765340051270768797114324562291232201486232 462728840082228859334694943477743198307650012420374125365389249712651768 -131776588232594972255777649206567320338061471477811725806702054151290252 31472043180361439617980833132544850110943883369080890722278786629107628 -5961664481968065504823382003538804229336739136240908717770483137477456 722351769246397427865270518182475924172222357378144113248455430696656 93878343461212773918586759022334368944010651758103940471975728130612 -95592681800341241277296233300832558302214353663993838838577883834868 41634790191131063210888629765583357020845625933576181588238778182552 -13936295068064242654729392915446150762330722439463395349506372368488 4045182362993096546784545052702282647971953511355346978628439483220 -1062701894734956175602327175315458674030959500282038965423982676924 256459649784050971207284569212441996943675040503103180406710637212 -57709734724845648912090174522151135714278853267038668156157868992 12153005083455119529122284311415304647462102060888120578436682307 -2406401626414324343746563575869808824782931044900643158950599971 449105840481193161884750567257028703367516412585554400171866890 -78996265368429079118013549058436508446509452503993511834925650 13109093052218561111137671541747428560864068581509706530641689 -2049218622402956644350490453379175367227864675085518185017233 301303415905142916449843588495664606433759693923619398291732 -41580761868772328901842590178904706369026472084206008451876 5365113040262943479433997705054180067036308260891222155505 -644693829313954760172498533221854992519656915601541723705 71731828298864812802268603899355624836434020184867743210 -7334795513210803706517436006266060058370643492181530930 682989728878875810684537346120890928588745523322856055 -57172697972619449741387104525586264686698343949422455 4226158290506747020131443419536269019866825889091500 -269121764902623042560625370550056308979867340869800 14198857298392070342554145297476835831442968012100 -578321988619101115121213409365880613402609688700 15961340415131975059297267606639156809924912000 -220720851022013939349538517195371169708198400"};

inline const EliminantData e7_3_h1{"x3", 119,
    "5317991353240733131727570427468867047230653060663383949312000000 -98019036075297848183056077552432780274599684871346934691921920000 1098759293323246546512110892440119473621419358215417540389109760000 -9305718974821085677811148533918240248548281811944475222438051840000 65113268802402200478525426791012973944464656086732606877047193600000 -394046712276679250169937971915477424725853689736022406260651458560000 2120477184719184687909529467574362503309040056101340761096036810752000 -10334275693315162730742501425160945657985705715529777725552751280128000 46202883626048272893214883998659314525038880033265154243257408946176000 -191297437298409715833973441970431226167739110188661910161889358249984000 738780827716860155253065617261688708737616255470467254037109394531942400 -2676181837866157465124121869252517828887974363206276139033897785517670400 9133426483052267815004033114279867587137539131902245605998876572093644800 -29472676795039732970734547702915016051055469216731276093351250213864755200 90184928909873771799432761661136216708184513107610597609746891377263136000 -262307357426217645783615015266291229953598598109678467351599564732054385920 726607074049122059949903497786269863005806535278198855839594575897076134400 -1920000384806180026768867421031537805803949214018610412439630758504547658240 4846060182856939686502282874159690356258654662377278202700184434834229251840 -11695698788657658011476017683648425807762896347480114232710059819716386479872 27013496275542415222023898874133963150112893916727310080078230054731729365760 -59749103051104069900082654913774362932116508404875695431707764026079324402176 126611218508152514171021884078842994748237775495659584068454223721873984155136 -257106642098986647794761688311621745956940627647648459595343771802548540196608 500353563387757953315580846341686490346251719009013776065028881870121108834304 -933016705955937135119323562999416823231028982454515912424262648992194752998400 1666350818986961443923020156264509852302084853480440742528762549779805507678176 -2848340507587261881920978915930434665052734871687834518943803961285485435643680 4654627782602904770609612602896237363606246929547882870907718816433560227299552 -7260233976254603124125288557777967078459922242578361722097381607395252017834656 10784574134608484614276985456547825052341992329805230146179268661318496034215328 -15206890525973623513320114356674689405486194792925228453628670976495944887480416 20259564142565286382067849026583726403797529586011137954566489403735710614317808 -25322646140778716665367209582629589229402613718695019077543030437619026934511872 29361049740649058190095422773938113133727049612048263846703870604726429273818848 -30958898262828372238095893876477609469256161228209064040807927251062574932231808 28503379824617763124097418982546938583969974303980617091962899726958833174324912 -20543542214535775343928825028111253860312177959979652483009700253869835271874960 6294369642269549673426137151386593173604138265575910629636206811805707511761437 13818211675329783251259102108459155176182048091914822307750576223359914637453455 -37746690309720320985994632077313901348434569764528336593925529654080198675646244 61753673833125499831493137549382712686215192881835369866733354263253711754859516 -80854547668572429281210675119560892341208614027928965716233593125981815435023888 89812864504052969401079860636375036763636864288507524282286470644623557615081560 -84535429159155233862550289641436464123003887379615811860052338807579720883023478 63510492448268670372687644118857216784764228069599171336461180087553652873279182 -28806449551758167167381070887475541786044250380199710546870177374097227663790102 -13819200006296826887332553242838278598966190774297960615356684080259858578141754 55928883492126546344671899768119435072107772811080555472486301876729279728981672 -88395953903308372639893176053856383836415322538976509138114310058609164273031496 103856916225563001905855479279765329540729798592811495080146581136794192997376655 -98858852486177981613232255698962149696211353827260075743006756056647230069954747 74958489545439966999218456704579034920402987004206042834929843114050283410125302 -38345022907819988966927460815044040501482214859561550856915205551605926851820930 -1933984189289290909758871181978501503101517835043559405349470423047513359646551 36563363991331046122778540325816464357200982292566309581429772964642137060912551 -58503023292998810962908820458611734395532683946103963774344297544010645359207942 64667016802341655818291153908789200846667212133580648087527559877011677639859826 -56276689024449602807134567146798786876912510628461995409738619384328995479952536 37923246804712273090895791414049387753363649314958327356686885503364596103010544 -15804099822546624431889611254391986315665298657063854127105952207976547865842410 -4200208277200018663918651182754824696675095403130261450762898272570211599919886 18003614435967420980166907884494599849844980028338457204276354810013230173559043 -23996289375134293702397518464953017416246840639996724092934265805096201432712959 22896421430919467671417906469523160708148809783127242961452861967501009283931308 -16995162401109429557563518044417613234180033412772287866423551699626340777728236 9149147822823806906962230588662742746287438437686110908864974694553824509909820 -1869742082865858170225132674874943447999722991925364389597345372662327003166296 -3251030792816307243173986937505264238031030686149502911284928922438610811256614 5695431308223163606750558298931569422162344146029502538889329771578111276950458 -5821933601002230572963625899395935531203363265386106574852162725576728360729418 4474341067570798992753095703878403797977587900230422629718901911972829744054802 -2576535585553216941235505881748794931817753435988641400362962157269000059779618 843529225509532660779460709613447818199390135853982049123805773210824449139958 340595998345860120135567539574048861325777859683069626803906775976914933436704 -900249258061313444009645965975640288401133468845786027012643996236702493508180 963559193738019288439599749329178881976923800367915767314219049684509727035118 -740277516467837260839729452407794530488339855141041598796887742435105433205290 426598693884268067338770371748908806365114744547975422291326227423958316393441 -154344454413030230195558495324921592627026175652284039931753566289870331238957 -18885641734696226473355081221670109230833882865922496011983680467999251729610 92892730203535900594667159886630284670524914382364037000390898844638421946062 -97845830445709246884644720769627109615510112764829332200297118664141758644699 69959142495111919393279706463185659777899040344087434117780022465957676438599 -36656988921005907726196449218481987931866142444159602442626409986332511730722 11970618337580002956766486464244718621348103877552988866424400460263954584070 1040976609337647949468550831667972659771119324734367564216165811934766725081 -5200598435234017820505208745149033546910570946107973493933702513891175352873 4753327116203770112084797783068716505097074618408061967453779229506733606706 -2927038165335938086853904991790396160894433995898356814034484966458012844294 1343092453302416775833184680845511498973033819341236028253064406432275375821 -429090583194986620166032640192537465928491354854617432007488220581026924349 50203978196716392445791374937845914764500892727351051576948994601806057256 46158080222791719528724103649073653365386485473469418723802372444031145104 -41003170223247363091599963775495621392415719665053564221553740094953432948 19285883832633296542887968256983510105494652603418248603315795245263457344 -5634188094551462720145386313127480084110640040599162247381032217495719512 475504463177526413957760735598869270023707338832121518609174521427627560 558986006147223809653953006323757972748961682009357527454919823835136791 -399619501134062850592562711231620683906906119687234950479946264083966699 155786600706317593080732257843590930097562320551848816986555178225045864 -37306475891729024014762407510734957928120463380785652234775685168349684 2187089992872666480014105137597260558103254357667821151374732139513218 2818112964763938831003560438163327584479611740100456207329307087403146 -1614594187941944814891286660729588683748976829917613597170905151176782 516151068910408155820399739685397453980831540964931713471262497972746 -100829000245539286655843015478331689172231142856179692701741937186305 3368364183716110092469752017751431110250756244416851974618979321701 6572883557813607115063681865239951263598799030394109795800045060474 -3283450397388770774006401566576559204621165267840621179138287123670 1031319099761786646251537681910532174270190841045644984130431961954 -249680291106143280241018835564758843320175661225821177424525292822 49212547709312655403731992925601954539383684164719382796569460742 -8026521807779078099496238258304727304087936835093634106534385898 1081478431569654626009258053539930201185578706540437961929852917 -118566734244541430886739082169060500770838134263466432240586949 10256500407063673515218118277406679603598463165413692852750954 -661996321847218796068287208154089929196932463764640942695594 28572142588965250828016623923248449622787682754546590053837 -623744015652591601670205734762122870831994162006221990413"};

inline const EliminantData e6_3_h1{"x3", 101,
    "446201620912851710794055315043558727793812439040 -5970091094929099291107016178576455666569981198336 54956862112783810928181826738240314636476199469056 -390811972141409570262352446028389195713538504523776 2345416005757619944748010845785735225833990004408320 -12296269949783674561034099631570563346793487654977536 57724805446986778564540591366311097869260812896485376 -246317806151607009947614038893190006132943659073929216 965833450260597608670637228985038216735033541178353664 -3507391144656252588241576000834153338016240516439009280 11864289574806461749157687866946545721640388480080753216 -37549398669469064618491404250349251298103313074223249536 111556403718909975585042193985610935450985330327798025296 -311910444204478491525686781524742216649919870695292936208 822280356201276757927422346722674238555203030542292664576 -2046807634124746479321033866947971592607665709250896466720 4815217751927711346791066364373414448388380533686308362728 -10713154223781970681173785420072062491556536536976223630728 22549161222430386183608267502748067727666572080394217257988 -44907345465673484752677835549915381616308978558104109929360 84618521132058565642549103143785317869429133164796407117101 -150844185455615567255483714719341206736546450798252724485465 254364597537871570975284759118655801254332547323430302651150 -405743116891842974585208861357409219861363395354878349480024 612380460693768440871773749073945732272186880021261998877349 -875113963128364673685794098870412312567351427548775200004993 1185630843249395191547875465219341425290948445000653446938823 -1526156016359413728700771221981215402722504361600304503707071 1872140311833306055253112547604404320557478273540474816242205 -2197142616370071997752676286281654178936005418170556941864365 2477660626761403597845544417084070514622384049066587378036896 -2695279129437608065469390397221342766341704813704469316565954 2835433701981662882068588945651386104804048704393507162564893 -2884252164405306448117386421259048268986488851508923254464557 2827426102309617415089093304345547856770953623242517510626736 -2653031260591475199015786134718569035816857413556039498720084 2358669599996507371239530783357053968184783637965137255750024 -1957846841895078664510239606394345202411065376438607044585244 1482575111628520660082626404685754443506000630228282037525432 -977867340837642392768018881489052493366220469043864074527732 491766472172297444603170160453087191972251139268914030745220 -64289892666775037219425989232698561842251433476705352663704 -278945493495224974314286977888017233682365342439482314928900 526430447145328824729273526640420290370517101891583559600064 -678379950713096427271349581801112479268074670188010049765152 740804443402906260135865009076566078898436726677260064209660 -723437773277172187573344151721247865703874576057058786645840 641035988242594321731767126475011901128999801733089421531572 -512246964568992242392698713221172537445964128081045582227348 359435224624336029210539130176048914537249135075824824148656 -207440334442393198667039888458264495684556945767681966433896 75710441609060446524728615339027145373100155489714689483180 21604102072091727758542772876876306504838293754672061494810 -80248321816710686802873660978717285967176547645289112968438 103727618132515579179402773133416119620715279258622028072932 -100868755076088189226682412281496766781111480676495550161140 82258536089640272288149509294477219539005077695487522749302 -57970183302251603419654961306043425453455813053820477148466 34566800668606464343700458091411364463430345415525433898210 -16383644568171057304816744132324477326999822644552147091878 4136127404028507683677730195509342689102464969628360294162 2448626876880142407515132852862076928913043337935695489050 -5091766004144148182025039566270136471217289325488871960720 5211357311516214470643681545481350157748897861517575943216 -4205038938600327672804921451310081054705566281185567057186 2880449505767857832367939657821857907905008739339817966542 -1722083524791071937275223955515869701707457252145375576992 883624776677143096193640273337726641926852894182302897924 -365844093248197813880318931085013840771534850915964839168 91100779597310425911980208315659416104663130431912801252 27847050547862877200320462747908632404588568320607377368 -62044289670560951692846051883485532537357245491675755676 58353887299451282295931377670775776235048712427538410548 -42801139152078013889617819216603291344568555788701334096 27298429710753168330147448633665498685113651255938321004 -15754306291891017136056764020082795793908703387391423800 8385092507307451984906201504724689649995181449911987384 -4158959074188012109187108793403217630081388694570956516 1933988921439293195469245555839057789403000884600297488 -846254668982236036130963702540888323950320830947175956 349173361624441055757559121760687306723274054819456068 -136002653968064858424211455167796115036642943021590992 50025097256033736148221913546357943308441010505896292 -17373295515964501643797136024825465698321434682820076 5693288809915569850120359913933561680515494371702321 -1758699778656065182425515796649314364989143766487161 511400484439012231385964862157738050955388834378366 -139733354682245393321428617402456758035160677933092 35796740615382398885298967204849897416534790629933 -8574371869161530658987820760170185731254834290789 1913914136459751675483098693532003485746543254063 -396457437890074706831914824872045975693198088483 75819734083435665076464730202188368026690437353 -13299684783778380566640907764584095732685621109 2121856171516406265190177954088620136793636144 -304497055879317382444174963304459359118141166 38715888461462869028868892744214611570993773 -4268028432749925091690300460592874748842233 394868683968983093689505159570909541213552 -29044225364799470649873570312140343108960 1526222320849667867688684374054814420480 -43316614062737407568779520450405292288"};

inline const EliminantData e6_3_h2{"x3", 62,
    "7176902311937267597352960000 -63935286731053017507053568000 399843715184474955262341120000 -1965764640832898839737014200320 8193254275314202221366521370624 -29792334645086350198275186421248 96312668127950023620573089912976 -279881292674846037180105828690048 736814302624650073499123557784400 -1765609824944028233625757684850592 3858859512197506584743793325704936 -7693673293317379815378916857414144 13978077490223112750713848520000136 -23093289922724516044177470806375016 34590603147607745081071881647260329 -46777732301916799546957263457901784 56736923977077571150912980537328233 -61045239892045312401412474185577596 57108713980664370406222711634860701 -44533258600030824329782702723403172 25754099801447208802135893114691377 -5506773889529575627395134456923560 -10900969369323449326468798316973849 19761681445815159942981174871733088 -20188941574110618150578705304430161 14202358308412638850212352987090788 -5742232611467996731383311668741917 -1570190865515015457366830818567044 5648740711606386591873392674677879 -5948880658615999334374796571219144 3868106929529148762149605373828154 -1258995580792601908577943150171216 -853879665000749089689937169600598 1715750052119667014938302077428104 -1499771919293409567273925312020942 912888495260506476555714495569400 -254675582893363617963644083458150 -156524700943028756585375788114864 250591779632840858079012274593070 -210754892342268589669423384800992 104847524519386925269074792690078 -16046875591916438782483046815032 -19822089010062331168255611933090 27934823512978080917038217731864 -18891540266011228264345732880890 7806076572680194957966216721384 -1269024611811072417466760739747 -1623952795000087557877271247768 1876612307555759003085287593757 -1325495568850663913046822215564 722686827400045498790015516321 -329147016934629053928253191636 129532305407715005005113350181 -44529061623094804552954953960 13469000037841152898081791595 -3593330620975215538779860800 840650703590361114731290675 -171221634223124842794559500 29979979441425878491638375 -4380052206593637030292500 514712484479377144996875 -45016029840810490875000 2277208974357528750000"};

}  // namespace einmetric::fixtures
