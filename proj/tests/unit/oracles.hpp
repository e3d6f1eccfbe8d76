#pragma once

// Reference values computed independently with mpmath at 80 significant
// digits and frozen here to 70.

namespace oracles {

struct RealPoint {
  const char* z;
  const char* li2;
};

inline constexpr RealPoint kLi2Real[] = {
    {"-50", "-9.276995185332621840100358345743840949548613784993014817746643589426587"},
    {"-5", "-2.749279126060808290025587515376268644497062503275871695018969430331037"},
    {"-1.5", "-1.147380660375570754079976633862792129215444977985475919221840118546567"},
    {"-1", "-0.8224670334241132182362075833230125946094749506033992188677791146850037"},
    {"-0.7", "-0.6051584023377052839744268875770931750818677704720978326253367495737052"},
    {"-0.5", "-0.4484142069236462024430644059157743208342699413491991285017463713168244"},
    {"-0.3", "-0.2800743337595829042302169723054253636922896527276591602433647052045374"},
    {"0.2", "0.2110037754397047726111850960740725172460210625590953706905162487386357"},
    {"0.5", "0.582240526465012505902656320159680108744198474806126425434347047873171"},
    {"0.75", "0.9784693929303061037430666665245614977614842746194872521048291995006418"},
    {"0.99", "1.588625448076375327031229473980552467944959731142123890278173449470347"},
    {"0.999999", "1.64491925133051071220304410816559803401207343486112550208979881019399"},
    {"1", "1.644934066848226436472415166646025189218949901206798437735558229370007"},
};

struct ComplexPoint {
  const char* re;
  const char* im;
  const char* li2_re;
  const char* li2_im;
};

inline constexpr ComplexPoint kLi2Complex[] = {
    {"0", "1", "-0.2056167583560283045590518958307531486523687376508498047169447786712509",
     "0.915965594177219015054603514932384110774149374281672134266498119621763"},
    {"0.5", "0.5", "0.4539852691502955833142419237860497501646027251778063134340039299751692",
     "0.6437673328892687487420174026526823673568264117355113474757737129724745"},
    {"2", "1", "1.186688537000057831112800100406877183446797185716335782276999505126031",
     "2.407740769345772001713905275524847990699284512640423572532432565657915"},
    {"-3", "-2", "-2.071307165231514321160139679267853573848049967420630905357815564003103",
     "-0.8922731679007034857680454406797812032145779189357137713311468785617488"},
    {"0.9", "0.4", "1.018274783210708973789807348007998224192109858079093453708569137642316",
     "0.7633582459821352403024624417421648471655231148134268501345356883740973"},
    {"0.5", "0.8660254037844386", "0.2741556778080377638974973890650401836752296501570411550313961735352289",
     "1.014941606409653582611196876106200824655164315611930164476941836193679"},
    {"0.3", "-0.9", "0.08053530000584173669855450564974805058826793383457671916707280457487358",
     "-0.9496750723809330819299986846798172534117638186462226647157155642211542"},
    {"1", "1", "0.6168502750680849136771556874922594459571062129525494141508343360137528",
     "1.46036211675311954767977573949178759760879529937399370784794693292034"},
    {"1.5", "0.1", "2.173388539506636904512804312295436559653828529119227369312545229064362",
     "1.326182357838019315247689860238149601408806597135186143300897540327041"},
    {"-0.2", "0.7", "-0.2794033312105193503529671489602984172042302083868136625887600168663907",
     "0.6155694539562824697846297576814826934376889657239623764770783906582153"},
    // On the cut: limit from below.
    {"1.2", "0", "2.129169430383959659444305569819388370406906273476168500844349817537012",
     "-0.572780063414942109945151830031522412227072923641636409750835961084203"},
    {"3", "0", "2.320180423313098396406194473703104657826604713509307662551837725366029",
     "-3.451392295223202661433820583818085645152190031025692849804372604444667"},
};

struct PolylogPoint {
  int n;
  const char* z;
  const char* value;
};

inline constexpr PolylogPoint kLiN[] = {
    {3, "0.5", "0.5372131936080402009406232255949658266704024993403781706897619307183241"},
    {3, "0.9", "1.0496589501864398696458324932101000704383554289835523361585727335447"},
    {4, "-0.7", "-0.6728742689973310299617986852477867093346859159662808605006098035695084"},
    {3, "1", "1.202056903159594285399738161511449990764986292340498881792271555341838"},
    {5, "-1", "-0.9721197704469093059356551435534695325535133620330432612258056355348159"},
    {3, "-0.95", "-0.8602562955656587088435086344896819400594861208792120594447149672394746"},
    {6, "0.6", "0.6059592438068042075606161140186039291818571483181977419627201347429521"},
};

inline constexpr const char* kCatalan = "0.915965594177219015054603514932384110774149374281672134266498119621763";

}  // namespace oracles
