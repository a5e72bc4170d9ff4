#!/usr/bin/env python3
"""Regenerates the bundled text-processing assets under data/.

Outputs:
  data/stopwords.txt    319 lowercase stopwords, one per line
  data/pos_lexicon.tsv  word<TAB>TAG lexicon for the rule-based tagger
  data/liwc/*.txt       nine word-class lists (pairwise disjoint)

The lists are curated, not canonical; they only need to be stable,
deterministic inputs for the feature extractor.
"""

import os
import sys

OUT = os.path.join(os.path.dirname(__file__), "..", "data")

# ---------------------------------------------------------------------------
# Stopwords: the classic Glasgow IR list (318 words) plus "shall".

from sklearn.feature_extraction import text as _sk_text  # noqa: E402

STOPWORDS = sorted(set(_sk_text.ENGLISH_STOP_WORDS) | {"shall"})
assert len(STOPWORDS) == 319, len(STOPWORDS)

# ---------------------------------------------------------------------------
# POS lexicon word lists.

DETERMINERS = """the a an this that these those each every either neither
another such any some no all both half certain enough few little many much
more most other several what which whose whichever whatever""".split()

PRONOUNS = """i me my mine myself we us our ours ourselves you your yours
yourself yourselves he him his himself she her hers herself it its itself
they them their theirs themselves who whom whoever anybody anyone anything
everybody everyone everything nobody somebody someone something one oneself
none""".split()

PREPOSITIONS = """in on at by for with about against between into through
during before after above below to from up down under over of off since
until while because although though if unless than as per via within without
toward towards upon among amid despite behind beside besides beyond near
outside inside onto except around across along throughout underneath
alongside amongst atop unto concerning regarding notwithstanding aboard
whether once where when whenever wherever""".split()

CONJUNCTIONS = "and or but nor so yet plus either neither".split()

NUMBERS = """zero one two three four five six seven eight nine ten eleven
twelve thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty
thirty forty fifty sixty seventy eighty ninety hundred thousand million
billion trillion dozen""".split()

INTERJECTIONS = """oh hey wow ouch oops yeah hmm ah aha alas bravo hurray ugh
uh um whoa yay huh phew shh hush ahem gosh darn gee hooray ow yikes eek
hello hi bye goodbye okay ok please thanks congrats cheers""".split()

# Regular verbs: forms are derived mechanically (base, -s, -ing, -ed).
REGULAR_VERBS = """accept act add admire admit advise agree aim allow announce
annoy answer appear applaud apply approve argue arrange arrive ask attach
attack attempt attend attract avoid bake balance ban bang bare bat battle
beam behave belong bless blind blink block blot blush boast boil bolt bomb
book bore borrow bounce bow box brake branch breathe bruise brush bubble bump
burn bury buzz calculate call camp care carry carve cause challenge change
charge chase cheat check cheer chew choke chop claim clap clean clear click
climb close coach coil collect colour comb command communicate compare
compete complain complete concern confess confuse connect consider consist
contain continue copy correct cough count cover crack crash crawl cross
crush cry cure curl curve cycle dam damage dance dare decide decorate delay
delight deliver depend describe desert deserve destroy detect develop
disagree disappear disapprove disarm discover dislike divide double doubt
drag drain dream dress drip drop drown drum dry dust earn educate embarrass
employ empty encourage end enjoy enter entertain escape examine excite excuse
exercise exist expand expect explain explode extend face fade fail fancy
fasten fear fence fetch file fill film fire fit fix flap flash float flood
flow flower fold follow fool force form found frame frighten fry gather gaze
glow glue grab grate grease greet grin grip groan guarantee guard guess guide
hammer hand handle hang happen harass harm hate haunt head heal heap heat
help hook hop hope hover hug hunt hurry identify ignore imagine improve
include increase influence inform inject injure instruct intend interest
interfere interrupt introduce invent invite irritate itch jail jam jog join
joke judge juggle jump kick kill kiss kneel knit knock knot label land last
laugh launch learn level license lick lie lighten like list listen live load
lock long look love man manage march mark marry match mate matter measure
meddle melt memorise mend mess milk mine miss mix moan moor mourn move muddle
mug multiply murder nail name need nest nod note notice number obey object
observe obtain occur offend offer open order overflow owe own pack paint
park part pass paste pat pause peck pedal peel peep perform permit phone
pick pinch pine place plan plant play please plug point poke polish pop
possess post pour practise pray preach precede prefer prepare present
preserve press pretend prevent prick print produce program promise protect
provide pull pump punch puncture punish push question queue race radiate
rain raise reach realise receive recognise record reduce reflect refuse
regret reign reject rejoice relax release rely remain remember remind remove
repair repeat replace reply report reproduce request rescue retire return
rhyme rinse risk rob rock roll rot rub ruin rule rush sack sail satisfy save
saw scare scatter scold scorch scrape scratch scream screw scribble scrub
seal search separate serve settle shade share shave shelter shiver shock
shop shrug sigh sign signal sin sip ski skip slap slip slow smash smell
smile smoke snatch sneeze sniff snore snow soak soothe sound spare spark
sparkle spell spill spoil spot spray sprout squash squeak squeal squeeze
stain stamp stare start stay steer step stir stitch stop store strap
strengthen stretch strip stroke stuff subtract succeed suck suffer suggest
suit supply support suppose surprise surround suspect suspend switch talk
tame tap taste tease telephone tempt terrify test thank thaw tick tickle tie
time tip tire touch tour tow trace trade train transport trap travel treat
tremble trick trip trot trouble trust try tug tumble turn twist type
undress unfasten unite unlock unpack untidy use vanish visit wail wait walk
wander want warm warn wash waste watch water wave weigh welcome whine whip
whirl whisper whistle wink wipe wish wobble wonder work worry wrap wreck
wrestle wriggle x-ray yawn yell zip zoom""".split()

# Irregular verbs: base -> (past, participle); base/-s/-ing derived.
IRREGULAR_VERBS = {
    "be": ("was", "been"), "beat": ("beat", "beaten"),
    "become": ("became", "become"), "begin": ("began", "begun"),
    "bend": ("bent", "bent"), "bet": ("bet", "bet"),
    "bind": ("bound", "bound"), "bite": ("bit", "bitten"),
    "bleed": ("bled", "bled"), "blow": ("blew", "blown"),
    "break": ("broke", "broken"), "breed": ("bred", "bred"),
    "bring": ("brought", "brought"), "build": ("built", "built"),
    "burst": ("burst", "burst"), "buy": ("bought", "bought"),
    "catch": ("caught", "caught"), "choose": ("chose", "chosen"),
    "cling": ("clung", "clung"), "come": ("came", "come"),
    "cost": ("cost", "cost"), "creep": ("crept", "crept"),
    "cut": ("cut", "cut"), "deal": ("dealt", "dealt"),
    "dig": ("dug", "dug"), "do": ("did", "done"),
    "draw": ("drew", "drawn"), "drink": ("drank", "drunk"),
    "drive": ("drove", "driven"), "eat": ("ate", "eaten"),
    "fall": ("fell", "fallen"), "feed": ("fed", "fed"),
    "feel": ("felt", "felt"), "fight": ("fought", "fought"),
    "find": ("found", "found"), "flee": ("fled", "fled"),
    "fling": ("flung", "flung"), "fly": ("flew", "flown"),
    "forbid": ("forbade", "forbidden"), "forget": ("forgot", "forgotten"),
    "forgive": ("forgave", "forgiven"), "freeze": ("froze", "frozen"),
    "get": ("got", "gotten"), "give": ("gave", "given"),
    "go": ("went", "gone"), "grind": ("ground", "ground"),
    "grow": ("grew", "grown"), "have": ("had", "had"),
    "hear": ("heard", "heard"), "hide": ("hid", "hidden"),
    "hit": ("hit", "hit"), "hold": ("held", "held"),
    "hurt": ("hurt", "hurt"), "keep": ("kept", "kept"),
    "know": ("knew", "known"), "lay": ("laid", "laid"),
    "lead": ("led", "led"), "leave": ("left", "left"),
    "lend": ("lent", "lent"), "let": ("let", "let"),
    "light": ("lit", "lit"), "lose": ("lost", "lost"),
    "make": ("made", "made"), "mean": ("meant", "meant"),
    "meet": ("met", "met"), "pay": ("paid", "paid"),
    "put": ("put", "put"), "quit": ("quit", "quit"),
    "read": ("read", "read"), "ride": ("rode", "ridden"),
    "ring": ("rang", "rung"), "rise": ("rose", "risen"),
    "run": ("ran", "run"), "say": ("said", "said"),
    "see": ("saw", "seen"), "seek": ("sought", "sought"),
    "sell": ("sold", "sold"), "send": ("sent", "sent"),
    "set": ("set", "set"), "shake": ("shook", "shaken"),
    "shine": ("shone", "shone"), "shoot": ("shot", "shot"),
    "show": ("showed", "shown"), "shrink": ("shrank", "shrunk"),
    "shut": ("shut", "shut"), "sing": ("sang", "sung"),
    "sink": ("sank", "sunk"), "sit": ("sat", "sat"),
    "sleep": ("slept", "slept"), "slide": ("slid", "slid"),
    "speak": ("spoke", "spoken"), "spend": ("spent", "spent"),
    "spin": ("spun", "spun"), "spread": ("spread", "spread"),
    "spring": ("sprang", "sprung"), "stand": ("stood", "stood"),
    "steal": ("stole", "stolen"), "stick": ("stuck", "stuck"),
    "sting": ("stung", "stung"), "stink": ("stank", "stunk"),
    "strike": ("struck", "struck"), "swear": ("swore", "sworn"),
    "sweep": ("swept", "swept"), "swim": ("swam", "swum"),
    "swing": ("swung", "swung"), "take": ("took", "taken"),
    "teach": ("taught", "taught"), "tear": ("tore", "torn"),
    "tell": ("told", "told"), "think": ("thought", "thought"),
    "throw": ("threw", "thrown"), "understand": ("understood", "understood"),
    "wake": ("woke", "woken"), "wear": ("wore", "worn"),
    "weep": ("wept", "wept"), "win": ("won", "won"),
    "wind": ("wound", "wound"), "write": ("wrote", "written"),
}

MODALS = "can could will would shall should may might must".split()
AUXILIARIES = "is are am was were been being has had does did".split()

NOUNS = """time year people way day man woman child life world school state
family student group country problem hand part place case week company
system program question work government number night point home water room
mother area money story fact month lot right study book eye job word
business issue side kind head house service friend father power hour game
line end member law car city community name president team minute idea body
information back parent face others level office door health person art war
history party result change morning reason research girl guy moment air
teacher force education foot boy age policy process music market sense
nation plan college interest death experience effect use class control care
field development role effort rate heart drug show leader light voice wife
police mind price report decision son view relationship town road arm
difference value building action model season society tax director position
player record paper space ground form event official matter center couple
site project activity star table court produce american oil situation cost
industry figure street image phone data picture practice piece land product
doctor wall patient worker news test movie north love support technology
bed economy nature fire dog hair article computer theory dinner future risk
fish mouth era operation thanks village strategy task science box agency
direction defense camera author budget performance glass fund skill crime
stage ability oak bird opportunity trip choice dance instance brother
energy period course summer evening weapon unit language bank size bridge
garden flower fruit vegetable animal horse cat cow sheep goat pig chicken
duck rabbit lion tiger bear wolf fox deer monkey elephant snake spider bee
ant fly worm shark whale dolphin seal crab shell stone rock mountain hill
valley river lake sea ocean island beach forest tree branch leaf root grass
seed rain snow wind storm cloud sky sun moon planet earth metal gold
silver iron steel wood paper cloth cotton wool silk leather plastic rubber
glass brick sand clay salt sugar flour bread butter cheese milk cream egg
meat beef pork lamb rice bean corn potato tomato onion carrot apple orange
banana grape lemon peach pear plum berry nut cake pie soup tea coffee juice
wine beer bottle cup plate bowl spoon fork knife pan pot oven stove fridge
sink table chair sofa couch desk shelf drawer closet lamp clock mirror
window curtain carpet floor ceiling roof stair wall fence gate yard garage
kitchen bathroom bedroom hall office attic basement door lock key handle
hammer nail screw drill saw ladder bucket broom mop soap towel brush comb
razor scissors needle thread button zipper pocket sleeve collar shirt pants
dress skirt coat jacket sweater hat cap glove sock shoe boot belt scarf
ring necklace watch bag purse wallet umbrella suitcase ticket passport map
camera film photo letter envelope stamp card gift toy doll ball kite drum
guitar piano violin flute trumpet song tune note band concert stagehand
audience actor actress singer dancer painter writer poet artist scientist
engineer lawyer judge nurse farmer cook chef waiter driver pilot sailor
soldier guard captain chief king queen prince princess knight castle tower
palace church temple mosque shrine museum library theater cinema stadium
park zoo circus fair market shop store mall bakery butcher pharmacy
hospital clinic station airport harbor port dock train bus tram subway taxi
truck van bike wheel engine brake seat ladderback tire roadway highway lane
corner block square plaza fountain statue monument flag anthem border
nation2 citizen voter mayor governor senator minister ambassador embassy
treaty battle army navy troop fleet missile rifle sword shieldmaiden helmet
armor victory defeat peace freedom justice truth honor courage wisdom
knowledge memory dream hope faith doubt fear anger joy sorrow grief pride
shame guilt envy greed mercy grace charm beauty glory fame luck fate chance
destiny habit custom culture tradition religion spirit soul ghost angel
devil heaven hell magic miracle mystery secret puzzle riddle clue hint sign
symbol signal code message rumor gossip scandal drama comedy tragedy plot
scene chapter verse poem novel essay diary journal magazine newspaper
headline column review critic editor publisher printer ink page cover title
index glossary appendix footnote quote phrase sentence paragraph grammar
spelling accent dialect slang proverb saying speech lecture debate argument
discussion conversation interview meeting conference seminar workshop
lesson exam quiz grade diploma degree scholarship tuition classroom campus
dormitory locker notebook pencil pen eraser ruler calculator keyboard mouse
screen monitor printer2 laptop tablet router server network website email
password account profile username avatar icon folder file document backup
software hardware circuit battery charger cable plug socket switch button2
remote antenna satellite radar laser sensor robot machine factory mill mine
quarry refinery warehouse cargo freight shipment delivery invoice receipt
bill coin cash salary wage bonus pension loan debt credit mortgage interest2
profit loss budget2 expense income revenue share stock bond dividend
insurance contract deal agreement partnership merger brand logo slogan
advertisement campaign customer client vendor supplier inventory stockroom
aisle shelfmate checkout cashier bargain discount coupon refund warranty
quality quantity weight height width depth length distance speed pace
temperature pressure volume density mass gravity friction momentum velocity
orbit axis angle curve slope line2 circle triangle rectangle cube sphere
cylinder cone pyramid pattern shape surface edge vertex diagonal radius
diameter circumference area2 perimeter fraction decimal percent ratio
average median mode range sample statistic graph chart diagram axis2 scale
measure2""".split()

IRREGULAR_PLURALS = {
    "man": "men", "woman": "women", "child": "children", "foot": "feet",
    "tooth": "teeth", "mouse": "mice", "goose": "geese", "person": "people",
    "life": "lives", "leaf": "leaves", "wolf": "wolves", "knife": "knives",
    "wife": "wives", "shelf": "shelves", "loaf": "loaves", "half": "halves",
    "sheep": "sheep", "deer": "deer", "fish": "fish",
}

ADJECTIVES = """able absent accurate active actual adorable advanced afraid
aggressive alert alive amazing ancient angry annual anxious attractive
automatic available average awake aware awesome awful awkward basic
beautiful big bitter black blue bold brave brief bright brilliant broad
broken brown busy calm capable careful careless cautious cheap cheerful
chilly civil classic clean clever cloudy clumsy coarse cold colorful
comfortable common complex confident constant cool correct crazy creative
critical crowded cruel curious current cute dangerous dark dead deaf dear
decent deep delicate delicious dense desperate different difficult digital
direct dirty distant dizzy domestic dramatic dull dumb eager early eastern
easy economic effective efficient elderly electric elegant empty enormous
equal essential ethnic exact excellent exciting exotic expensive expert
external faint fair faithful false famous fancy fast fat federal fellow
female fierce final fine firm fiscal flat fluffy foolish foreign formal
fortunate fragile free frequent fresh friendly full funny fuzzy general
gentle genuine giant gifted glad global golden gorgeous graceful grand
grateful gray greasy green gross guilty handsome handy hard harsh healthy
heavy helpful helpless hidden high hollow holy honest hot huge humble hungry
icy ideal idle immediate immense important impossible impressive inner
innocent intense internal international jealous joint juicy junior keen key
kind2 large late lazy legal lengthy liberal light2 limited liquid literary
little2 local logical lonely loose loud low loyal lucky mad major male
massive mature mean2 medical medium mental messy mild military minor mobile
moderate modern modest moist moral muddy mutual mysterious narrow nasty
national native natural naval nervous neutral new nice noble noisy normal
northern notable numerous2 odd official2 old open2 opposite optimistic
ordinary organic original outdoor outer oval overall pale parallel partial
particular passive past patient2 peaceful perfect permanent personal
physical pink plain pleasant polite political poor popular positive2
possible powerful practical precious precise pregnant premium pretty
previous primary prime principal private probable professional prominent
proper proud public pure purple quick quiet rapid rare raw ready real
reasonable recent red regional regular relative reliable religious remote2
rich ripe rival rough round royal rude rural sacred sad2 safe salty sample2
secret2 secure senior sensible sensitive separate2 serious severe shallow
sharp shiny short shy sick silent silly silver2 similar simple sincere
skilled slight slim slippery small smart smooth social soft solar solid
sore sorry southern spare2 spicy spiritual stable steady steep sticky stiff
still straight strange strict strong stubborn stupid subtle sudden
sufficient sunny super sweet swift tall tame2 technical temporary tender
tense terrible thick thin tiny tired top tough toxic traditional tropical
typical ugly ultimate unable unfair unique united unusual upper upset urban
urgent useful useless usual vague valid valuable vast verbal vertical
violent visible visual vital vivid warm2 weak wealthy weird western wet
white wide wild willing wise wooden wrong young""".split()

IRREGULAR_ADJ = ["good", "better", "best", "bad", "worse", "worst",
                 "far", "further", "furthest"]

ADVERBS = """very quite too rather almost always never often sometimes soon
now then here there today tomorrow yesterday maybe perhaps again already
still just even also ever seldom rarely anywhere everywhere somewhere
nowhere2 abroad ahead apart aside away back2 downstairs upstairs indoors
outdoors forever meanwhile moreover however therefore anyway otherwise
instead together alone twice thrice seldom2 somewhat enough2 well far2
fast2 hard2 late2 lately anymore forward backward north2 south east west
overseas elsewhere henceforth thereafter thus hence nonetheless""".split()

FIRST_NAMES = """james john robert michael william david richard joseph
thomas charles christopher daniel matthew anthony mark donald steven paul
andrew joshua kenneth kevin brian george edward ronald timothy jason
jeffrey ryan jacob gary nicholas eric jonathan stephen larry justin scott
brandon benjamin samuel gregory frank alexander raymond patrick jack dennis
jerry tyler aaron jose adam henry nathan douglas zachary peter kyle walter
ethan jeremy harold keith christian roger noah gerald carl terry sean austin
arthur lawrence jesse dylan bryan joe jordan billy bruce albert willie
gabriel logan alan juan wayne roy ralph randy eugene vincent russell elijah
louis bobby philip johnny mary patricia jennifer linda elizabeth barbara
susan jessica sarah karen nancy lisa betty margaret sandra ashley kimberly
emily donna michelle dorothy carol amanda melissa deborah stephanie rebecca
sharon laura cynthia kathleen amy shirley angela helen anna brenda pamela
nicole emma samantha katherine christine debra rachel catherine carolyn
janet ruth maria heather diane virginia julie joyce victoria olivia kelly
christina lauren joan evelyn judith megan cheryl andrea hannah martha jean
frances gloria ann teresa kathryn sara janice julia grace judy theresa rose
beverly denise marilyn amber danielle abigail brittany rosa diana
natalie sophia alexis lori kayla jane""".split()

PLACES = """america england france germany spain italy portugal greece
russia china japan korea india brazil mexico canada australia egypt kenya
nigeria morocco turkey iran iraq israel syria jordan2 lebanon poland austria
belgium holland netherlands sweden norway denmark finland iceland ireland
scotland wales london paris berlin madrid rome athens moscow beijing tokyo
seoul delhi mumbai cairo lagos nairobi sydney melbourne toronto vancouver
chicago boston seattle denver dallas houston phoenix miami atlanta detroit
philadelphia pittsburgh baltimore washington california texas florida
georgia2 virginia2 ohio indiana illinois michigan wisconsin minnesota iowa
missouri kansas nebraska montana idaho utah nevada arizona oregon alaska
hawaii europe asia africa antarctica arctic pacific atlantic mediterranean
amazon nile danube rhine thames volga himalaya alps andes sahara""".split()

MONTHS_DAYS = """january february march april may june july august september
october november december monday tuesday wednesday thursday friday saturday
sunday christmas easter thanksgiving halloween""".split()


def _strip_digits(words):
    # Trailing digits mark deliberate near-duplicates in the source lists;
    # drop the marker and let dedup handle collisions.
    return [w.rstrip("0123456789") for w in words if w.rstrip("0123456789")]


def verb_forms(base):
    forms = {base}
    if base in IRREGULAR_VERBS:
        past, part = IRREGULAR_VERBS[base]
        forms.add(past)
        forms.add(part)
    elif base.endswith("e"):
        forms.add(base + "d")
    elif len(base) > 2 and base.endswith("y") and base[-2] not in "aeiou":
        forms.add(base[:-1] + "ied")
    else:
        forms.add(base + "ed")
    # -ing
    if base.endswith("e") and not base.endswith("ee") and base != "be":
        forms.add(base[:-1] + "ing")
    else:
        forms.add(base + "ing")
    # 3rd person singular
    if base.endswith(("s", "x", "z", "ch", "sh")):
        forms.add(base + "es")
    elif len(base) > 2 and base.endswith("y") and base[-2] not in "aeiou":
        forms.add(base[:-1] + "ies")
    else:
        forms.add(base + "s")
    past_forms = set()
    if base in IRREGULAR_VERBS:
        past_forms.update(IRREGULAR_VERBS[base])
    else:
        past_forms.add(next(f for f in forms if f.endswith("ed") or f.endswith("ied"))
                       if any(f.endswith(("ed", "ied")) for f in forms) else base)
    return forms, past_forms


def noun_plural(base):
    if base in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[base]
    if base.endswith(("s", "x", "z", "ch", "sh")):
        return base + "es"
    if len(base) > 2 and base.endswith("y") and base[-2] not in "aeiou":
        return base[:-1] + "ies"
    return base + "s"


def build_lexicon():
    lex = {}

    def put(word, tag):
        word = word.strip().lower()
        if word and word not in lex:
            lex[word] = tag

    for w in _strip_digits(DETERMINERS):
        put(w, "DT")
    for w in _strip_digits(PRONOUNS):
        put(w, "PRP")
    for w in _strip_digits(PREPOSITIONS):
        put(w, "IN")
    for w in _strip_digits(CONJUNCTIONS):
        put(w, "CC")
    for w in _strip_digits(NUMBERS):
        put(w, "CD")
    for w in _strip_digits(INTERJECTIONS):
        put(w, "UH")
    for w in MODALS + AUXILIARIES:
        put(w, "VB")

    for base in sorted(set(_strip_digits(REGULAR_VERBS)) | set(IRREGULAR_VERBS)):
        forms, past_forms = verb_forms(base)
        for f in sorted(forms):
            if f in past_forms:
                put(f, "VBD")
            elif f.endswith("ing"):
                put(f, "VBG")
            else:
                put(f, "VB")

    for base in _strip_digits(NOUNS):
        put(base, "NN")
        put(noun_plural(base), "NN")

    for w in _strip_digits(ADJECTIVES) + IRREGULAR_ADJ:
        put(w, "JJ")
    for w in _strip_digits(ADVERBS):
        put(w, "RB")
    for w in _strip_digits(FIRST_NAMES + PLACES + MONTHS_DAYS):
        put(w, "NNP")
    return lex


# ---------------------------------------------------------------------------
# LIWC word classes (pairwise disjoint).

LIWC = {
    "personal_pronouns": """i me my mine myself we us our ours ourselves you
        your yours yourself yourselves he him his himself she her hers
        herself it its itself they them their theirs themselves""",
    "positive": """happy joy love great good wonderful excellent amazing
        awesome fantastic beautiful nice sweet fun funny cool best brilliant
        cheerful delight delighted glad pleased proud excited exciting
        lovely perfect super terrific thrilled bliss charming hopeful kind
        caring friendly warm gentle generous grateful thankful blessed
        smile laugh celebrate win winner success successful""",
    "negative": """sad bad hurt hate terrible awful horrible worst angry mad
        upset annoyed annoying cry crying pain painful fear afraid scared
        worry worried anxious lonely miserable depressed gloomy bitter
        cruel nasty ugly disgusting fail failure lose loser broken sorrow
        grief regret ashamed guilty jealous stress stressed tired sick
        abandoned betrayed disappointed""",
    "quantifiers": """many few both several much most more fewer less least
        plenty numerous various couple dozen countless multiple single
        double triple half quarter entire whole majority minority bunch
        loads tons scores myriad ample abundant sparse scant""",
    "articles": "a an the",
    "prepositions": """in on at by for with about against between into
        through during before after above below from under over of off
        since until toward towards upon among amid despite behind beside
        besides beyond near outside inside onto except around across along
        within without via per throughout underneath alongside""",
    "negations": """no not never neither nor none nothing nowhere nobody
        cannot cant wont dont didnt doesnt isnt arent wasnt werent hasnt
        havent hadnt shouldnt wouldnt couldnt aint""",
    "tentative": """maybe perhaps possibly probably seems seem seemed appear
        appears appeared guess suppose wonder doubt unsure uncertain
        somewhat somehow sometime hopefully apparently likely unlikely
        roughly approximately nearly almost might""",
    "certainty": """always definitely certainly certain sure surely
        absolutely clearly obviously obvious undoubtedly truly completely
        totally entirely exactly precisely indeed must guaranteed
        unquestionably undeniably positively wholly utterly forever""",
}


def main():
    os.makedirs(OUT, exist_ok=True)
    os.makedirs(os.path.join(OUT, "liwc"), exist_ok=True)

    with open(os.path.join(OUT, "stopwords.txt"), "w") as f:
        f.write("\n".join(STOPWORDS) + "\n")

    lex = build_lexicon()
    with open(os.path.join(OUT, "pos_lexicon.tsv"), "w") as f:
        f.write("# word<TAB>TAG lexicon for the rule-based tagger\n")
        for word in sorted(lex):
            f.write(f"{word}\t{lex[word]}\n")

    classes = {}
    for name, words in LIWC.items():
        classes[name] = sorted(set(words.split()))
    names = sorted(classes)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            overlap = set(classes[a]) & set(classes[b])
            assert not overlap, f"LIWC overlap {a}/{b}: {overlap}"
    for name in names:
        with open(os.path.join(OUT, "liwc", name + ".txt"), "w") as f:
            f.write("\n".join(classes[name]) + "\n")

    print(f"stopwords: {len(STOPWORDS)}")
    print(f"lexicon entries: {len(lex)}")
    for name in names:
        print(f"liwc/{name}: {len(classes[name])}")


if __name__ == "__main__":
    sys.exit(main())
