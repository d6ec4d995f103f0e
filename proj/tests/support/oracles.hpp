#pragma once

// Reference values computed independently with mpmath at 80 digits and rounded
// to 64 significant digits.

namespace oracle {

inline constexpr const char* kPi = "3.141592653589793238462643383279502884197169399375105820974944592";
inline constexpr const char* kE = "2.718281828459045235360287471352662497757247093699959574966967628";
inline constexpr const char* kAbsExpIMinusPi = "2.734005283722658111617498880228145524164849967357291487642125961";
inline constexpr const char* kGap = "0.01572345526361287625721140887548302640760287365733191267515833373";
inline constexpr const char* kAngleB = "0.9836993198422059481951764252079026292107514989294928644441897662";
inline constexpr const char* kNew4 = "1.895786362742238516251661755576561605159045998830893690508143858";
inline constexpr const char* kPiPowIRe = "0.4132921161015943366266283942766975649855906870835450828719766425";
inline constexpr const char* kPiPowIIm = "0.9105984992126147070600445142368774745149290533775202071961642796";
inline constexpr const char* kIPowPiRe = "0.2205840407496980886689459132557875104588480381594106723700488732";
inline constexpr const char* kIPowPiIm = "-0.9753679720836313851574828741084947884740965123637749729870889912";
inline constexpr const char* kLnPi = "1.144729885849400174143427351353058711647294812915311571513623071";
inline constexpr const char* kCos1 = "0.5403023058681397174009366074429766037323104206179222276700972554";
inline constexpr const char* kSin1 = "0.8414709848078965066525023216302989996225630607983710656727517100";
inline constexpr const char* kTwoSqrtEMinusPi = "0.1558498878104630552346581923488242591103828020451902021752140310";
inline constexpr const char* kGauss01 = "0.7468241328124270253994674361318530053544996868126063290276544990";
inline constexpr const char* kSqrtPi = "1.772453850905516027298167483341145182797549456122387128213807790";
inline constexpr const char* kTail1 = "0.1394027926403309882496163055387195860442750412485872350792493960";
inline constexpr const char* kDisc = "-1.003522912746822322606658885534498855715288967559047673454521135";
inline constexpr const char* kPiCubed = "31.00627668029982017547631506710139520222528856588510769414453810";
inline constexpr const char* kFourESquared = "29.55622439572260090892170984230003125272126228220738929634851129";
inline constexpr const char* kRStar = "4.507824182911426327938408698256636878596992548661602506166238539";
inline constexpr const char* kBoundRhs01 = "4.615298286701887541074630440213868340268932686174989358998015446";
inline constexpr const char* kEllipse21 = "9.688448220547676198428503196391829411953918397886600825083116352";
inline constexpr const char* kLiouvilleRoot2 = "-0.5238117913724220360855447173499584648547574271326453209343533852";
inline constexpr const char* kEPowInvE = "1.444667861009766133658339108596430223058595453242253165820522664";
inline constexpr const char* kEPowHalfPi = "4.810477380965351655473035666703833126390170874664534940020815489";
inline constexpr const char* kEPlusOne = "3.718281828459045235360287471352662497757247093699959574966967628";
inline constexpr const char* kTwoSqrtE = "3.297442541400256293697301575628327143307552201420296023150158623";
inline constexpr const char* kEInvPlusESq = "7.756935540102092548825951230736468680626126701583615158594964624";
inline constexpr const char* kGaussTail4 = "1.406689683990738931422189738251589895474260008220678782221876614e-8";
inline constexpr const char* kGaussTail10 = "1.860037988010417981479847901931559168679446146188390983560306938e-45";

// Published decimal expansions, 50 places.
inline constexpr const char* kPi50 = "3.14159265358979323846264338327950288419716939937510";
inline constexpr const char* kE50 = "2.71828182845904523536028747135266249775724709369995";

}  // namespace oracle
