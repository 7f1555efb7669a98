#include "impjudge/lexicon.hpp"

namespace impjudge {

namespace {

// Every form used by the shipped corpus, features read off the agreement
// suffixes. Kept in the lexicon file format so `lexicon dump` round-trips and
// the seed exercises the same loader as user lexicons.
const char* seed_text = R"SEED(
# --- imperative verbs (suffix paradigm: -0 2MS, -i 2FS, -uu 2MPL, -ayn 2FPL)
taʕaal      V.IMP GLOSS=come.2MS      PERS=2 NUM=Sg GEND=M TENSE=Pres
taʕaal-i    V.IMP GLOSS=come.2FS      PERS=2 NUM=Sg GEND=F TENSE=Pres
taʕaal-uu   V.IMP GLOSS=come.2MPL     PERS=2 NUM=Pl GEND=M TENSE=Pres
taʕaal-ayn  V.IMP GLOSS=come.2FPL     PERS=2 NUM=Pl GEND=F TENSE=Pres
ʔiktub      V.IMP GLOSS=write.2MS     PERS=2 NUM=Sg GEND=M TENSE=Pres
ʔiktub-i    V.IMP GLOSS=write.2FS     PERS=2 NUM=Sg GEND=F TENSE=Pres
ʔiktub-uu   V.IMP GLOSS=write.2MPL    PERS=2 NUM=Pl GEND=M TENSE=Pres
ʔiktub-ayn  V.IMP GLOSS=write.2FPL    PERS=2 NUM=Pl GEND=F TENSE=Pres
ʔiftaħ      V.IMP GLOSS=open.2MS      PERS=2 NUM=Sg GEND=M TENSE=Pres
biz         V.IMP GLOSS=take.2MS      PERS=2 NUM=Sg GEND=M TENSE=Pres
ʔimsaħ      V.IMP GLOSS=erase.2MS     PERS=2 NUM=Sg GEND=M TENSE=Pres
haat-i      V.IMP GLOSS=bring.2FS     PERS=2 NUM=Sg GEND=F TENSE=Pres
ʔimnaʕ      V.IMP GLOSS=prevent.2MS   PERS=2 NUM=Sg GEND=M TENSE=Pres
ʕarrif      V.IMP GLOSS=introduce.2MS PERS=2 NUM=Sg GEND=M TENSE=Pres
ḍaʕ         V.IMP GLOSS=put.2MS       PERS=2 NUM=Sg GEND=M TENSE=Pres
ʔirħam-naa  V.IMP GLOSS=have.mercy.on-us.2MS PERS=2 NUM=Sg GEND=M TENSE=Pres
quum        V.IMP GLOSS=stand.2MS     PERS=2 NUM=Sg GEND=M TENSE=Pres
# gender unmarked on these plural forms; the topic supplies it through the chain
ʔimšuu      V.IMP GLOSS=leave.2PL     PERS=2 NUM=Pl TENSE=Pres
ʔibquu      V.IMP GLOSS=stay.2PL      PERS=2 NUM=Pl TENSE=Pres
ʕaawin      V.IMP GLOSS=help.2MS      PERS=2 NUM=Sg GEND=M TENSE=Pres
ʕaawin-i    V.IMP GLOSS=help.2FS      PERS=2 NUM=Sg GEND=F TENSE=Pres
ʕaawinuu    V.IMP GLOSS=help.2MPL     PERS=2 NUM=Pl GEND=M TENSE=Pres
ʕaawin-ayn  V.IMP GLOSS=help.2FPL     PERS=2 NUM=Pl GEND=F TENSE=Pres

# --- pronouns
ʔantah      PRON GLOSS=you.2MS PERS=2 NUM=Sg GEND=M

# --- person-denoting nominals (aboutness-topic candidates)
ʕali        N GLOSS=Ali      PERS=3 NUM=Sg GEND=M
ʕaliya      N GLOSS=Alia     PERS=3 NUM=Sg GEND=F
ʔaħmad      N GLOSS=Ahmed    PERS=3 NUM=Sg GEND=M
ʔawlaad     N GLOSS=boys     PERS=3 NUM=Pl GEND=M
banaat      N GLOSS=girls    PERS=3 NUM=Pl GEND=F
tullaab     N GLOSS=students PERS=3 NUM=Pl GEND=M
taalibaat   N GLOSS=students PERS=3 NUM=Pl GEND=F
ʔallah      N GLOSS=God      PERS=3 NUM=Sg GEND=M

# --- anaphors (object position; person checked against pro)
nafas-ak    N GLOSS=self-your PERS=2
nafas-i     N GLOSS=self-my   PERS=1
nafas-uh    N GLOSS=self-his  PERS=3

# --- reciprocal
baʕḍ        N GLOSS=each

# --- other nominal / adjunct material
l-baab      N GLOSS=the-door
l-masaaha   N GLOSS=the-duster
ṣ-ṣabuura   N GLOSS=the-blackboard
l-qalam     N GLOSS=the-pen
l-kitaab    N GLOSS=the-book
al-kitaab   N GLOSS=the-book
l-kalaam    N GLOSS=the-speech
li-ʕaliya   N GLOSS=for-Alia
maʕak       N GLOSS=with.you
baʕd        N GLOSS=after
saaʕah      N GLOSS=hour
fii         N GLOSS=in
l-makaan    N GLOSS=the-place
l-munaasib  N GLOSS=the-suitable
tʒaħ        N GLOSS=you.come
jiʔk        N GLOSS=came.you

# --- force field elements
ʔinna       C  GLOSS=that
muh         Q  GLOSS=is
ʔayna       WH GLOSS=where
ʔaiš        WH GLOSS=what

# --- aspect particles (tag tense carriers)
ʕa          ASP GLOSS=will TENSE=Fut
qa          ASP GLOSS=ASP  TENSE=Past

# --- coordination and vocative
wa          CONJ GLOSS=and
yaa         VOC  GLOSS=VOC
)SEED";

}  // namespace

const Lexicon& Lexicon::seed() {
  static const Lexicon lex = Lexicon::load_string(seed_text);
  return lex;
}

}  // namespace impjudge
