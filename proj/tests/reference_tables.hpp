#pragma once

#include <map>
#include <string>
#include <vector>

namespace cuspgroup::testing {

using FactorTable = std::map<unsigned, std::vector<std::string>>;

// Invariant factors of the full cuspidal group, 11 <= p <= 97.
inline const FactorTable& full_group_table()
{
    static const FactorTable table = {
        {11, {"25"}},
        {13, {"19", "19"}},
        {17, {"292", "1168"}},
        {19, {"1461", "13149"}},
        {23, {"37181", "4498901"}},
        {29, {"4", "4", "4", "4", "9203892", "450990708"}},
        {31, {"2", "10", "1772833370", "8864166850"}},
        {37, {"53505562232535", "481550060092815"}},
        {41, {"21553759881619888", "538843997040497200"}},
        {43, {"2", "2", "223364647569268558", "10944867730894159342"}},
        {47, {"142605986469692740469", "75438566842467459708101"}},
        {53, {"14032869452244904602299329", "2371554937429388877788586601"}},
        {59, {"589324663207792234929168861989", "495622041757753269575431012932749"}},
        {61, {"77", "77", "2249026400408198764708332679163", "56225660010204969117708316979075"}},
        {67, {"661", "661", "20742411322218610498404968504426647", "2509831769988451870307001189035624287"}},
        {71,
         {"701", "701", "24193505826034073099187101823196730189", "29637044636891739546504199733415994481525"}},
        {73,
         {"2", "2", "2", "2", "3313439439643796256465574023292013345776614",
          "29820954956794166308190166209628120111989526"}},
        {79,
         {"521", "521", "2263623089554573652699188302579475498580792443",
          "382552302134722947306162823135931359260153922867"}},
        {83,
         {"2406984131025101712234550549597592650903636598642273",
          "4046140324253195978266279473873553246169013122317660913"}},
        {89,
         {"2", "2", "2", "2", "1522954443020854102271958820561189448280265949250848440630",
          "184277487605523346374907017287903923241912179859352661316230"}},
        {97,
         {"35", "35", "46112087576831945308457230271075213082193874861568739344925034980",
          "737793401229311124935315684337203409315101997785099829518800559680"}},
    };
    return table;
}

// Invariant factors of the rational cuspidal group, 11 <= p <= 97.
inline const FactorTable& rational_group_table()
{
    static const FactorTable table = {
        {11, {"5"}},
        {13, {"19"}},
        {17, {"584"}},
        {19, {"4383"}},
        {23, {"408991"}},
        {29, {"4", "4", "64427244"}},
        {31, {"10", "1772833370"}},
        {37, {"160516686697605"}},
        {41, {"107768799408099440"}},
        {43, {"2", "1563552532984879906"}},
        {47, {"3279937688802933030787"}},
        {53, {"182427302879183759829891277"}},
        {59, {"17090415233025974812945896997681"}},
        {61, {"77", "11245132002040993823541663395815"}},
        {67, {"661", "228166524544404715482454653548693117"}},
        {71, {"701", "846772703911192558471548563811885556615"}},
        {73, {"2", "2", "9940318318931388769396722069876040037329842"}},
        {79, {"521", "29427100164209457485089447933533181481550301759"}},
        {83, {"98686349372029170201616572533501298687049100544333193"}},
        {89, {"2", "2", "16752498873229395124991547026173083931082925441759332846930"}},
        {97, {"35", "184448350307327781233828921084300852328775499446274957379700139920"}},
    };
    return table;
}

} // namespace cuspgroup::testing
