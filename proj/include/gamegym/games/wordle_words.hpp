#pragma once
#include <array>
#include <cstdint>
#include <string_view>

namespace gamegym::words {

// Pinned guess/secret lexicon: 2,315 common five-letter words, alphabetical.
// FNV-1a 64 digest of the "word\n" concatenation, checked in tests.
inline constexpr std::uint64_t kWordListDigest = 0xac5a3e3c8f77551dULL;

inline constexpr std::array<std::string_view, 2315> kFiveLetterWords = {
    "abate", "abbey", "abbot", "abide", "abode", "about", "above", "abram",
    "abuse", "abyss", "ached", "acids", "acres", "acted", "actin", "actor",
    "acute", "adapt", "added", "adept", "adieu", "admit", "adobe", "adopt",
    "adore", "adorn", "adult", "after", "again", "agent", "aging", "agony",
    "agree", "ahead", "aided", "aides", "aimed", "aisle", "alarm", "album",
    "alert", "algae", "alias", "alien", "align", "alike", "alive", "alkyl",
    "allay", "alley", "allow", "alloy", "aloft", "alone", "along", "aloof",
    "aloud", "alpha", "altar", "alter", "amber", "amend", "amine", "amino",
    "amiss", "among", "amour", "ample", "amply", "amuse", "angel", "anger",
    "angle", "anglo", "angry", "anima", "anion", "ankle", "annex", "anode",
    "aorta", "apart", "apple", "apply", "apron", "aptly", "arbor", "ardor",
    "areas", "arena", "argon", "argue", "ariel", "arise", "armed", "armor",
    "aroma", "arose", "array", "arrow", "ashes", "aside", "asked", "aspen",
    "assam", "assay", "asset", "atlas", "atoms", "attic", "audio", "audit",
    "aught", "aunts", "avail", "avant", "avert", "avian", "avoid", "await",
    "awake", "award", "aware", "awful", "awoke", "axial", "axiom", "axons",
    "babel", "backs", "bacon", "badge", "badly", "baked", "baker", "bales",
    "bands", "banks", "bantu", "barge", "barns", "baron", "barry", "basal",
    "based", "bases", "basic", "basil", "basin", "basis", "batch", "bates",
    "bathe", "baths", "baton", "beach", "beads", "beams", "beans", "beard",
    "bears", "beast", "beats", "beaux", "beech", "beers", "beets", "began",
    "begin", "begun", "being", "belle", "bells", "belly", "below", "belts",
    "bench", "bends", "benny", "berry", "berth", "beset", "betty", "bible",
    "bills", "billy", "binds", "birch", "birds", "birth", "bison", "bites",
    "black", "blade", "blame", "bland", "blank", "blast", "blaze", "bleak",
    "bleed", "blend", "bless", "blind", "blink", "bliss", "block", "blond",
    "blood", "bloom", "blown", "blows", "blues", "bluff", "blunt", "blush",
    "board", "boast", "boats", "bobby", "boils", "bolts", "bombs", "bonds",
    "bones", "bonus", "books", "boost", "booth", "boots", "booty", "bored",
    "borne", "boron", "bosom", "bound", "bowed", "bowel", "bower", "bowls",
    "boxer", "boxes", "brace", "braid", "brain", "brake", "brand", "brass",
    "brave", "bread", "break", "breed", "brent", "bribe", "brick", "bride",
    "brief", "brill", "brine", "bring", "brink", "brisk", "broad", "brock",
    "broke", "brood", "brook", "broom", "broth", "brown", "brows", "brunt",
    "brush", "brute", "bucks", "buddy", "buggy", "build", "built", "bulbs",
    "bulge", "bulky", "bulls", "bully", "bunch", "burke", "burns", "burnt",
    "burst", "buses", "bushy", "buyer", "bytes", "cabin", "cable", "cache",
    "cadet", "cadre", "cafes", "cages", "cakes", "calls", "camel", "campo",
    "camps", "canal", "candy", "canoe", "canon", "canto", "cards", "cared",
    "cares", "cargo", "carol", "carry", "carte", "carts", "carve", "casas",
    "cases", "caste", "casts", "catch", "cater", "causa", "cause", "caves",
    "cease", "cedar", "ceded", "cells", "cents", "chain", "chair", "chalk",
    "chang", "chant", "chaos", "chaps", "charm", "chart", "chase", "chasm",
    "cheap", "cheat", "check", "cheek", "cheer", "chess", "chest", "chick",
    "chief", "child", "chile", "chili", "chill", "china", "chips", "choir",
    "choke", "chord", "chose", "chuck", "chunk", "cider", "cigar", "circa",
    "cited", "cites", "civic", "civil", "claim", "clamp", "clans", "clash",
    "clasp", "class", "claws", "clays", "clean", "clear", "cleft", "clerk",
    "click", "cliff", "climb", "cling", "clips", "cloak", "clock", "clone",
    "close", "cloth", "cloud", "clown", "clubs", "clues", "clump", "clung",
    "coach", "coals", "coast", "coats", "cocoa", "coded", "codes", "codex",
    "cohen", "coils", "coins", "colic", "colin", "colon", "color", "combs",
    "comer", "comes", "comet", "comic", "comma", "comte", "cones", "congo",
    "cooks", "coral", "cords", "cores", "corps", "costa", "costs", "couch",
    "cough", "could", "count", "cours", "court", "cover", "crabs", "crack",
    "craft", "craig", "crane", "crank", "crash", "crawl", "crazy", "cream",
    "creed", "creek", "creep", "crept", "crest", "crews", "cried", "cries",
    "crime", "crisp", "crook", "crops", "cross", "crowd", "crown", "crows",
    "crude", "cruel", "crush", "crust", "cubes", "cubic", "cults", "cupid",
    "cured", "cures", "curls", "curly", "curry", "curse", "curve", "cycle",
    "cysts", "daddy", "daily", "dairy", "daisy", "dance", "danny", "darcy",
    "dared", "dares", "darts", "dated", "dates", "datum", "dazed", "deals",
    "dealt", "death", "debit", "debts", "debut", "decay", "decks", "decor",
    "deeds", "deems", "defer", "deity", "delay", "delta", "demon", "denis",
    "dense", "depot", "depth", "derby", "desks", "deter", "devil", "devon",
    "diane", "diary", "didst", "diets", "digit", "dimly", "dined", "diode",
    "dirty", "discs", "disks", "ditch", "ditto", "diver", "dizzy", "docks",
    "dodge", "dogma", "doing", "dolls", "dolly", "domes", "donna", "donne",
    "donor", "doors", "doped", "doris", "doses", "doubt", "dough", "dover",
    "doves", "dower", "downs", "dowry", "dozen", "draft", "drain", "drake",
    "drama", "drank", "drawn", "draws", "dread", "dream", "dress", "dried",
    "drier", "drift", "drill", "drink", "drive", "droit", "drops", "drove",
    "drown", "drugs", "drums", "drunk", "dryer", "duchy", "ducks", "ducts",
    "dukes", "dumas", "dummy", "dunes", "dusky", "dusty", "dutch", "dwarf",
    "dwell", "dwelt", "dying", "eager", "eagle", "earls", "early", "earns",
    "earth", "eased", "eaten", "ebony", "edema", "edged", "edges", "edict",
    "eerie", "eight", "elbow", "elder", "elect", "elegy", "elite", "email",
    "emery", "empty", "enact", "ended", "enemy", "enjoy", "ensue", "enter",
    "entry", "envoy", "epoch", "epoxy", "equal", "equip", "erase", "erect",
    "erred", "error", "essay", "ester", "ether", "ethic", "ethos", "ethyl",
    "evade", "event", "every", "evils", "evoke", "exact", "exams", "excel",
    "exert", "exile", "exist", "exits", "expel", "extra", "fable", "faced",
    "faces", "facet", "facts", "faded", "fades", "fails", "faint", "fairs",
    "fairy", "faith", "falls", "false", "famed", "fancy", "farce", "fared",
    "fares", "farms", "fatal", "fated", "fates", "fatty", "fault", "fauna",
    "favor", "fears", "feast", "feats", "feeds", "feels", "femme", "femur",
    "fence", "fermi", "ferns", "ferry", "fetal", "fetch", "fetus", "fever",
    "fewer", "fiber", "fibre", "field", "fiery", "fifth", "fifty", "fight",
    "filed", "files", "fills", "films", "filth", "final", "finch", "finds",
    "fined", "finer", "fines", "fired", "fires", "firms", "first", "fists",
    "fitch", "fixed", "fixes", "flags", "flake", "flame", "flank", "flaps",
    "flare", "flash", "flask", "flats", "flaws", "fleet", "flesh", "flies",
    "fling", "flint", "float", "flock", "flood", "floor", "flora", "flour",
    "flown", "flows", "fluid", "flung", "flush", "flute", "focal", "focus",
    "folds", "foley", "folio", "folks", "folly", "fonts", "foods", "fools",
    "force", "forge", "forks", "forme", "forms", "forte", "forth", "forts",
    "forty", "forum", "fossa", "found", "fowls", "foxes", "frail", "frame",
    "franc", "frank", "fraud", "freak", "freed", "freer", "fresh", "friar",
    "fried", "fries", "fritz", "frock", "frogs", "front", "frost", "frown",
    "froze", "fruit", "fuels", "fully", "fumes", "funds", "fungi", "funny",
    "fused", "fuses", "fuzzy", "gable", "gaily", "gains", "games", "gamma",
    "gangs", "gases", "gates", "gauge", "gaunt", "gauss", "gauze", "gazed",
    "gears", "geese", "genes", "genet", "genoa", "genre", "genus", "germs",
    "ghost", "giant", "gifts", "gills", "girls", "given", "giver", "gives",
    "gland", "glare", "glass", "glaze", "gleam", "glide", "globe", "gloom",
    "glory", "gloss", "glove", "glued", "goals", "goats", "godly", "going",
    "gonna", "goods", "goose", "gorge", "goths", "gotta", "gowns", "grace",
    "grade", "graft", "grail", "grain", "grams", "grand", "grant", "grape",
    "graph", "grasp", "grass", "grate", "grave", "great", "greed", "greek",
    "green", "greet", "grids", "grief", "grill", "grind", "grips", "groan",
    "groin", "groom", "gross", "group", "grove", "grown", "grows", "guard",
    "guess", "guest", "guide", "guild", "guilt", "guise", "gulls", "gypsy",
    "habit", "hairs", "hairy", "halls", "hands", "handy", "hangs", "happy",
    "hardy", "harry", "harsh", "haste", "hasty", "hatch", "hated", "hates",
    "haunt", "haven", "havoc", "hawks", "hazel", "heads", "heaps", "heard",
    "hears", "heart", "heath", "heats", "heavy", "hedge", "heels", "heirs",
    "helix", "hello", "helps", "hence", "henry", "herbs", "herds", "heron",
    "hertz", "hicks", "hides", "hills", "hilly", "hinge", "hints", "hired",
    "hitch", "hoard", "hobby", "hogan", "hoist", "holds", "holes", "holly",
    "homer", "homes", "homme", "honey", "honor", "hooks", "hoped", "hopes",
    "horde", "horns", "horse", "hosts", "hotel", "hotly", "hound", "hours",
    "house", "human", "humid", "humor", "humus", "hurry", "hurst", "hurts",
    "hydro", "hymns", "hyper", "icons", "ideal", "ideas", "idiom", "idiot",
    "idols", "iliac", "iliad", "image", "imply", "incur", "index", "india",
    "inert", "infer", "infra", "inlet", "inner", "input", "intel", "inter",
    "intra", "ionic", "irons", "irony", "isles", "issue", "items", "ivory",
    "jails", "james", "japan", "jeans", "jelly", "jenny", "jerry", "jesse",
    "jesus", "jewel", "jimmy", "johns", "joins", "joint", "jokes", "jolly",
    "jones", "judas", "judge", "juice", "jumps", "junta", "juror", "kappa",
    "karma", "keeps", "kelly", "kerry", "kicks", "kills", "kinds", "kings",
    "kirby", "kitty", "kneel", "knees", "knelt", "knife", "knock", "knots",
    "known", "knows", "kraft", "label", "labor", "laced", "lacks", "laden",
    "laird", "laity", "lakes", "lakhs", "lambs", "lamps", "lance", "lands",
    "lanes", "lapse", "large", "larva", "laser", "lasts", "latch", "later",
    "latex", "lathe", "laugh", "laura", "lawns", "layer", "leach", "leads",
    "leafy", "leaks", "leans", "leaps", "leapt", "learn", "lease", "least",
    "leave", "leben", "ledge", "legal", "lemma", "lemon", "lends", "leone",
    "level", "lever", "levin", "lewis", "liang", "libel", "liber", "liege",
    "liens", "lifts", "light", "liked", "likes", "limbs", "limit", "lined",
    "linen", "liner", "lines", "links", "linux", "lions", "lipid", "lists",
    "liter", "litre", "lived", "liver", "lives", "loads", "loans", "lobby",
    "lobes", "local", "locks", "locus", "lodge", "lofty", "logan", "logic",
    "login", "logos", "looks", "looms", "loops", "loose", "lords", "loser",
    "loses", "lotus", "louis", "loved", "lover", "loves", "lower", "lowly",
    "loyal", "lucid", "lucky", "lumen", "lumps", "lunar", "lunch", "lungs",
    "lupus", "lured", "lying", "lymph", "lynch", "lyric", "macon", "macro",
    "madam", "mafia", "magic", "magma", "maids", "mails", "mains", "maize",
    "major", "maker", "makes", "males", "malik", "mamma", "mango", "mania",
    "manic", "manly", "manor", "maple", "march", "maria", "marks", "marry",
    "marsh", "masks", "mason", "masse", "masts", "match", "mater", "mates",
    "maxim", "maybe", "mayor", "meals", "means", "meant", "meats", "mecca",
    "medal", "media", "meets", "melts", "menus", "mercy", "merge", "merit",
    "merry", "messy", "metal", "meter", "metre", "metro", "micro", "midst",
    "might", "miles", "milky", "mills", "mimic", "minds", "mined", "miner",
    "mines", "minor", "minus", "mirth", "mists", "misty", "mitch", "mites",
    "mixed", "mixer", "mixes", "modal", "model", "modem", "moder", "modes",
    "modus", "moist", "molar", "molds", "moles", "molly", "mommy", "monde",
    "money", "monks", "monte", "month", "moods", "moody", "moons", "moors",
    "moose", "moral", "mores", "morse", "moses", "motel", "moths", "motif",
    "motor", "motto", "mould", "mound", "mount", "mourn", "mouse", "mouth",
    "moved", "mover", "moves", "movie", "mucus", "muddy", "mules", "mummy",
    "mural", "mused", "muses", "music", "muted", "myths", "nails", "naive",
    "naked", "named", "names", "nancy", "nasal", "nasty", "natal", "naval",
    "nazis", "necks", "needs", "needy", "nerve", "nests", "never", "newer",
    "newly", "nexus", "niche", "nicht", "niece", "niger", "night", "ninth",
    "noble", "nobly", "nodal", "nodes", "noise", "noisy", "norma", "norms",
    "north", "noses", "notch", "noted", "notes", "nouns", "novel", "nurse",
    "nylon", "nymph", "oasis", "oaths", "obese", "occur", "ocean", "oddly",
    "odors", "odour", "offer", "often", "olden", "older", "olive", "omega",
    "omits", "onion", "onset", "opens", "opera", "opium", "opted", "optic",
    "orbit", "order", "organ", "oscar", "other", "otter", "ought", "ounce",
    "outer", "ovary", "ovens", "overt", "owing", "owned", "owner", "oxide",
    "ozone", "paced", "paces", "packs", "paddy", "padre", "pagan", "pages",
    "pains", "paint", "pairs", "palms", "palsy", "panel", "pangs", "panic",
    "pants", "paolo", "papal", "paper", "paris", "parks", "parry", "parti",
    "parts", "party", "pasha", "pasta", "paste", "patch", "pater", "paths",
    "patio", "patty", "pause", "paved", "peace", "peach", "peaks", "pearl",
    "pears", "pedal", "pedro", "peers", "peggy", "penal", "pence", "penny",
    "perch", "peril", "perry", "pesos", "pests", "peter", "petit", "petri",
    "petty", "phage", "phase", "phone", "photo", "piano", "picks", "piece",
    "piers", "piety", "piled", "piles", "pills", "pilot", "pinch", "pines",
    "pious", "piper", "pipes", "pitch", "pivot", "pixel", "pizza", "place",
    "plain", "plane", "plank", "plans", "plant", "plate", "plays", "plaza",
    "plead", "pleas", "plots", "pluck", "plugs", "plumb", "plume", "plump",
    "poems", "poets", "point", "poise", "poked", "poker", "polar", "poles",
    "polls", "polly", "ponds", "pools", "popes", "poppy", "porch", "pores",
    "porta", "ports", "posed", "poses", "posts", "pouch", "pound", "pours",
    "power", "pratt", "prays", "press", "price", "pride", "prima", "prime",
    "print", "prior", "prism", "privy", "prize", "probe", "prone", "proof",
    "props", "prose", "proto", "proud", "prove", "proxy", "psalm", "pulls",
    "pulse", "pumps", "punch", "pupil", "puppy", "purer", "purge", "purse",
    "quail", "quart", "quasi", "queen", "queer", "query", "quest", "queue",
    "quick", "quiet", "quill", "quilt", "quite", "quota", "quote", "rabbi",
    "raced", "races", "racks", "radar", "radii", "radio", "raged", "raids",
    "rails", "rains", "rainy", "raise", "rajah", "rally", "ralph", "ranch",
    "randy", "range", "ranks", "rapid", "rarer", "rated", "rates", "ratio",
    "raven", "razor", "reach", "react", "reads", "ready", "realm", "rebel",
    "recur", "redox", "reeds", "reefs", "refer", "regal", "reign", "reins",
    "relax", "relay", "relic", "remit", "renal", "renew", "rents", "repay",
    "repel", "reply", "reset", "resin", "rests", "reuse", "revue", "rhine",
    "rhyme", "rider", "rides", "ridge", "rifle", "right", "rigid", "rigor",
    "riley", "rings", "rinse", "riots", "risen", "rises", "risks", "risky",
    "rites", "rival", "river", "roads", "roast", "robes", "robin", "robot",
    "rocks", "rocky", "roger", "rogue", "roles", "rolls", "roman", "romeo",
    "roofs", "rooms", "roots", "ropes", "roses", "rotor", "rouen", "rouge",
    "rough", "round", "rouse", "route", "rover", "rowan", "rowed", "royal",
    "rubin", "ruddy", "rugby", "ruins", "ruled", "ruler", "rules", "rumor",
    "rural", "rusty", "sabha", "sable", "sacks", "sadly", "safer", "sages",
    "sahib", "sails", "saint", "saith", "salad", "sales", "salle", "sally",
    "salon", "salts", "salty", "sammy", "sands", "sandy", "santo", "satin",
    "sauce", "saved", "saves", "savoy", "scale", "scalp", "scand", "scans",
    "scant", "scare", "scarf", "scars", "scary", "scene", "scent", "scoop",
    "scope", "score", "scorn", "scots", "scout", "scrap", "screw", "scrub",
    "seals", "seams", "sears", "seats", "sects", "sedan", "seeds", "seeks",
    "seems", "seine", "seize", "sells", "sends", "senor", "sense", "serfs",
    "serum", "serve", "setup", "seven", "sever", "sewer", "sexes", "shack",
    "shade", "shady", "shaft", "shake", "shaky", "shale", "shall", "shalt",
    "shame", "shape", "share", "shark", "sharp", "shave", "shawl", "shear",
    "sheds", "sheep", "sheer", "sheet", "shelf", "shell", "shewn", "shift",
    "shine", "shiny", "ships", "shire", "shirt", "shiva", "shock", "shoes",
    "shone", "shook", "shoot", "shops", "shore", "short", "shots", "shout",
    "shown", "shows", "shrub", "shrug", "shunt", "sided", "sides", "siege",
    "sieve", "sighs", "sight", "sigma", "signs", "silks", "silly", "silva",
    "since", "sings", "sinks", "sinus", "siren", "sites", "sixth", "sixty",
    "sized", "sizes", "skies", "skill", "skins", "skirt", "skull", "slabs",
    "slack", "slain", "slang", "slant", "slash", "slate", "slave", "sleek",
    "sleep", "slept", "slice", "slick", "slide", "slime", "sling", "slips",
    "slits", "sloan", "sloop", "slope", "slots", "slows", "slump", "slums",
    "slung", "small", "smart", "smash", "smear", "smell", "smile", "smith",
    "smoke", "smoky", "snack", "snail", "snake", "snare", "sneak", "sneer",
    "snout", "snows", "snowy", "snuff", "sober", "socks", "soils", "solar",
    "soles", "solid", "solve", "songs", "sonny", "sores", "sorry", "sorts",
    "souls", "sound", "south", "space", "spade", "spain", "spake", "spans",
    "spare", "spark", "spasm", "speak", "spear", "speck", "speed", "spell",
    "spend", "spent", "sperm", "spice", "spies", "spike", "spill", "spine",
    "spins", "spire", "spite", "split", "spoil", "spoke", "spoon", "spore",
    "sport", "spots", "spray", "spurs", "squad", "squat", "stack", "staff",
    "stage", "stain", "stair", "stake", "stale", "stalk", "stall", "stamp",
    "stand", "stare", "stark", "starr", "stars", "start", "state", "stays",
    "stead", "steak", "steal", "steam", "steed", "steel", "steep", "steer",
    "stein", "stems", "steps", "stern", "stick", "stiff", "still", "sting",
    "stock", "stoic", "stole", "stone", "stony", "stood", "stool", "stoop",
    "stops", "store", "storm", "story", "stout", "stove", "strap", "straw",
    "stray", "strip", "stuck", "studs", "study", "stuff", "stump", "stung",
    "style", "sugar", "suite", "suits", "summa", "sunny", "super", "supra",
    "surge", "sutra", "swami", "swamp", "swarm", "swear", "sweat", "sweep",
    "sweet", "swell", "swept", "swift", "swine", "swing", "swiss", "sword",
    "swore", "sworn", "swung", "synod", "syrup", "table", "taboo", "tacit",
    "tails", "taint", "taken", "takes", "tales", "talks", "tally", "tanks",
    "taped", "taper", "tapes", "tasks", "taste", "taxed", "taxes", "teach",
    "teams", "tears", "tease", "teddy", "teens", "teeth", "telex", "tells",
    "tempo", "temps", "tempt", "tends", "tenet", "tenor", "tense", "tenth",
    "tents", "terms", "terra", "terry", "tests", "texas", "texts", "thank",
    "theft", "their", "theme", "there", "these", "theta", "thick", "thief",
    "thigh", "thine", "thing", "think", "third", "thorn", "those", "three",
    "threw", "throw", "thumb", "tibia", "ticks", "tidal", "tides", "tiers",
    "tiger", "tight", "tiles", "timed", "timer", "times", "timid", "tinge",
    "tints", "tired", "tires", "tithe", "title", "toast", "today", "token",
    "tolls", "tombs", "tommy", "tonal", "toned", "tones", "tonic", "tools",
    "tooth", "topic", "torah", "torch", "torso", "torts", "total", "totem",
    "touch", "tough", "tours", "towel", "tower", "towns", "toxic", "toxin",
    "trace", "track", "tract", "trade", "trail", "train", "trait", "tramp",
    "trans", "traps", "trash", "trays", "tread", "treat", "trees", "trend",
    "triad", "trial", "tribe", "trick", "tried", "tries", "trips", "trois",
    "troop", "trout", "truce", "truck", "truer", "truly", "trump", "trunk",
    "truss", "trust", "truth", "tubes", "tufts", "tumor", "tuned", "tunes",
    "tunic", "turks", "turns", "tutor", "twain", "tweed", "twice", "twigs",
    "twins", "twist", "tying", "tyler", "typed", "types", "ulcer", "ulnar",
    "ultra", "uncle", "under", "undue", "unfit", "union", "unite", "units",
    "unity", "until", "upper", "upset", "urban", "urged", "urges", "urine",
    "usage", "users", "usher", "using", "usual", "usury", "utter", "vague",
    "valet", "valid", "valor", "value", "valve", "vapor", "vases", "vault",
    "vegas", "veins", "venom", "venue", "venus", "verbs", "verge", "verse",
    "verso", "vexed", "vicar", "vices", "video", "views", "vigil", "vigor",
    "villa", "vines", "vinyl", "viola", "viral", "virus", "visit", "vista",
    "vital", "vivid", "vocal", "vogue", "voice", "volts", "voted", "voter",
    "votes", "vowed", "vowel", "wafer", "waged", "wager", "wages", "wagon",
    "waist", "waits", "waive", "wakes", "waldo", "wales", "walks", "walls",
    "waltz", "wants", "wards", "wares", "warns", "wasps", "waste", "watch",
    "water", "watts", "waved", "waves", "waxed", "wears", "weary", "weave",
    "weber", "wedge", "weeds", "weeks", "weigh", "weird", "welch", "wells",
    "welsh", "whale", "wharf", "wheat", "wheel", "where", "which", "whigs",
    "while", "whirl", "white", "whole", "whose", "widen", "wider", "widow",
    "width", "wield", "wight", "wills", "winds", "windy", "wines", "wings",
    "wiped", "wired", "wires", "wiser", "witch", "witty", "wives", "woman",
    "women", "woods", "woody", "words", "works", "world", "worms", "worry",
    "worse", "worst", "worth", "would", "wound", "woven", "wrath", "wreck",
    "wrist", "write", "writs", "wrong", "wrote", "wrung", "yacht", "yards",
    "yarns", "yates", "years", "yeast", "yield", "young", "yours", "youth",
    "zaire", "zeros", "zones",
};

}  // namespace gamegym::words
