//! Coefficient data for the degree-32 field carrying the 5-torsion
//! point of y² = x³ − x used by the "gauss5" catalog entry. Lists are
//! lowest-degree-first rational strings.

pub const MODULUS: &[&str] = &[
    "42519750293973101510656/59604644775390625",
    "0",
    "0",
    "0",
    "-1566006172797237067776/476837158203125",
    "0",
    "0",
    "0",
    "19381937697815969792/3814697265625",
    "0",
    "0",
    "0",
    "5499719606689792/30517578125",
    "0",
    "0",
    "0",
    "5815765876224/48828125",
    "0",
    "0",
    "0",
    "-3014308352/1953125",
    "0",
    "0",
    "0",
    "7019712/15625",
    "0",
    "0",
    "0",
    "-5984/125",
    "0",
    "0",
    "0",
    "1",
];

pub const CONJ_IMAGE: &[&str] = &[
    "0",
    "-967932649915931219539288298757579905701/688909964227622985219702822935326720000",
    "0",
    "0",
    "0",
    "302408708691505677038163370915426309/218268503517662727990400894395351040",
    "0",
    "0",
    "0",
    "267044512180898603837259684231547275/17636095084227148421624392267144364032",
    "0",
    "0",
    "0",
    "2277741541754188092085361411517078125/70544380336908593686497569068577456128",
    "0",
    "0",
    "0",
    "-156494069837264072608039975115234375/282177521347634374745990276274309824512",
    "0",
    "0",
    "0",
    "149352749457168751090947277490234375/1128710085390537498983961105097239298048",
    "0",
    "0",
    "0",
    "-58524206001032444027759320068359375/4514840341562149995935844420388957192192",
    "0",
    "0",
    "0",
    "4790654566375573228902435302734375/18059361366248599983743377681555828768768",
];

pub const C_X: &[&str] = &[
    "0",
    "0",
    "-81439988395883281871516965137600844307/39267048888604190095490837568606720000",
    "0",
    "0",
    "0",
    "5204255879111792157407822729338672067/1256545564435334083055706802195415040",
    "0",
    "0",
    "0",
    "52235416442340640725610650879537975/335078817182755755481521813918777344",
    "0",
    "0",
    "0",
    "130249842201914536135536860121578125/1340315268731023021926087255675109376",
    "0",
    "0",
    "0",
    "-19855799778278068961610199431640625/16083783224772276263113047068101312512",
    "0",
    "0",
    "0",
    "23525582545390461303337847705078125/64335132899089105052452188272405250048",
    "0",
    "0",
    "0",
    "-3358950938509991577994549560546875/85780177198785473403269584363207000064",
    "0",
    "0",
    "0",
    "842953070996425156836700439453125/1029362126385425680839235012358484000768",
];

pub const C_Y: &[&str] = &[
    "0",
    "-437462544009914237383046570075081088567/344454982113811492609851411467663360000",
    "0",
    "0",
    "0",
    "302408708691505677038163370915426309/327402755276494091985601341593026560",
    "0",
    "0",
    "0",
    "89014837393632867945753228077182425/8818047542113574210812196133572182016",
    "0",
    "0",
    "0",
    "2277741541754188092085361411517078125/105816570505362890529746353602866184192",
    "0",
    "0",
    "0",
    "-156494069837264072608039975115234375/423266282021451562118985414411464736768",
    "0",
    "0",
    "0",
    "149352749457168751090947277490234375/1693065128085806248475941657645858947072",
    "0",
    "0",
    "0",
    "-58524206001032444027759320068359375/6772260512343224993903766630583435788288",
    "0",
    "0",
    "0",
    "4790654566375573228902435302734375/27089042049372899975615066522333743153152",
];

pub const ROOT_RE: f64 = 0.10428817248336705;
pub const ROOT_IM: f64 = 0.7726131409038977;
