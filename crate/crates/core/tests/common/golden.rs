//! Reference values for the worked example x^5 - 200i x^4 + 1340 x^3 + 12.3491 x^2 - 239.182 x + 339.21817.

pub const COEFFS: [&str; 5] = ["-200i", "1340", "12.34910", "-239.18200", "339.2181700"];

pub const S: &str = "-0.81584332141809188725979656230961078805698101721846912138743787689146470958161238452336409696724026258808717657762183959351953475485743664638006008834788270026180162829207942917627476323600802063825066-0.63057627445592551766209342293767283127081247617831540184055709729814290242437736998005213095545448731240220174927694966883636580912497911035043693968538272771370661690862684267783555502528886912001289i";
pub const R1: &str = "0.37747923104677990537054720696120959354448980115967478133011942008037889722417622280665244014538690594117768823372500308739585940058062977483352794710876598360361485361542403140749630830436441090570208-0.466821003701321341760982840662657500220496999044896266030556503515342417002340501534541218808904885455382112417283951721517559653844115256905396985732092526163375444738646870686021501830132473555311i";
pub const R2: &str = "0.31152623959929454203531026680212305667581329306928935546952309606600450882565288773989895170460080820260411819602722716633669015231374795560798035158860462565687955370738966390212760479641932886238545e-2-6.515880062571684960427555456715739561909949017885672050023296949075357108982351498304707035768670434705294491917968368368377008654714928701920175749825825560080670253184158055421829508023205091953137i";
pub const R3: &str = "0.2806214035074929468234949530418045758551102470638537459914152454361227402630026122602677255801204011950151918487138814436726913624853479872139207968095758568959370275843832797806302776026675927402455e-3+206.48946243535247870977215601309576428312610033254451460946438770427343639887349370275581503132432061299660526043788096170373272105358447038199976185463002277378139422837250633105266650324928524956067i";
pub const R4: &str = "0.34508378292599492162341672992704317312211183272074559175887585906123484002053048068809733840629882207416075333487189735436012930573009243856080216228866292791120138190327894714179764114732975550346486+0.463697225781199030360772633124288881322842712567805648316019701433340733001308691601930073641175868971448605695998561352418556148809754449142410912841189847519928621430651231210260275880679737044336i";
pub const R5: &str = "-0.72595889777227526536114053450931580180921487705817712038968192534770990507322623498440903579431185649855949794240588659486302829919634504093762383371012453362828096808336125846809585577726102729053104+0.29541405139328562055609651158343897681502971818248058273446046883922394109889605481503149612078838192622738201372797033743291106164819127683399968086705464942722848119647363844924230723372578903450e-1i";
pub const Y1_RESIDUAL: &str = "-0.670262027444503796935327574226396e-164-0.6544040808887275757921518490182052e-164i";
pub const Y2_RESIDUAL: &str = "782.80523423472747885830053512057667802878185155109804472138877978797288845023593261799587178044693263047641385145542301541300132639723126683634661674780451644895094268241602508169015371777591202599037+3.799270173513100973067261361820864694346294263097462300898597218150086045413574860145860534268882746359410344388825418048881131462742095590763591634218088819410407844984109417239968078437399449343508i";
pub const Y3_RESIDUAL: &str = "-24471.054287118538775067300112549324321873140281249567516862365139015142893345917771313252678577076750957332054166784797037390657774481757164355894965388511999107977673996588972265894602403965918954074-104991.19695522642510188612985090191177345822867816842849130775316078784322324983271682941787786394335425919058315896694172852579484190669672162796753547171943376068083259295324383609618045156132i";
pub const Y4_RESIDUAL: &str = "-2341.3770402628034231126255827837762770160138195109616615488860930911512748641782916068603484330772106707019187084886849340955046992104827929943633431723898557859216192870129460155160031024099248163764-2079.89649144663713312049506952871938130578787897155052839664961789785696827631123166745862526887052141617769477590008391877569095143271049192990573015351337285464090257339529672681164668936088649247i";
