#include "maskdistill/analyzers.hpp"

// Bundled English lexicon for the rule-based tagger. Coverage is aimed at
// short informal SNS text: function words are enumerated exhaustively since
// they decide the 0 class, content words cover everyday plus social-media
// vocabulary, and everything else falls through to the suffix rules.

namespace maskdistill::analyzers {

namespace {

const char* const kLexiconTsv =
    "# punctuation and reserved surfaces\n"
    ".\tpunctuation\n"
    ",\tpunctuation\n"
    "!\tpunctuation\n"
    "?\tpunctuation\n"
    ";\tpunctuation\n"
    ":\tpunctuation\n"
    "'\tpunctuation\n"
    "\"\tpunctuation\n"
    "(\tpunctuation\n"
    ")\tpunctuation\n"
    "[\tpunctuation\n"
    "]\tpunctuation\n"
    "{\tpunctuation\n"
    "}\tpunctuation\n"
    "-\tpunctuation\n"
    "_\tpunctuation\n"
    "/\tpunctuation\n"
    "\\\tpunctuation\n"
    "@\tpunctuation\n"
    "#\tpunctuation\n"
    "$\tpunctuation\n"
    "%\tpunctuation\n"
    "^\tpunctuation\n"
    "&\tpunctuation\n"
    "*\tpunctuation\n"
    "+\tpunctuation\n"
    "=\tpunctuation\n"
    "<\tpunctuation\n"
    ">\tpunctuation\n"
    "|\tpunctuation\n"
    "~\tpunctuation\n"
    "`\tpunctuation\n"
    "<pad>\tother\n"
    "<bos>\tother\n"
    "<eos>\tother\n"
    "<unk>\tother\n"
    "<sep>\tother\n"
    "# determiners\n"
    "the\tdeterminer\n"
    "a\tdeterminer\n"
    "an\tdeterminer\n"
    "this\tdeterminer\n"
    "that\tdeterminer\n"
    "these\tdeterminer\n"
    "those\tdeterminer\n"
    "my\tdeterminer\n"
    "your\tdeterminer\n"
    "his\tdeterminer\n"
    "her\tdeterminer\n"
    "its\tdeterminer\n"
    "our\tdeterminer\n"
    "their\tdeterminer\n"
    "some\tdeterminer\n"
    "any\tdeterminer\n"
    "no\tdeterminer\n"
    "every\tdeterminer\n"
    "each\tdeterminer\n"
    "either\tdeterminer\n"
    "neither\tdeterminer\n"
    "both\tdeterminer\n"
    "all\tdeterminer\n"
    "few\tdeterminer\n"
    "many\tdeterminer\n"
    "much\tdeterminer\n"
    "more\tdeterminer\n"
    "most\tdeterminer\n"
    "several\tdeterminer\n"
    "such\tdeterminer\n"
    "another\tdeterminer\n"
    "other\tdeterminer\n"
    "what\tdeterminer\n"
    "which\tdeterminer\n"
    "whose\tdeterminer\n"
    "enough\tdeterminer\n"
    "certain\tdeterminer\n"
    "# pronouns\n"
    "i\tpronoun\n"
    "you\tpronoun\n"
    "he\tpronoun\n"
    "she\tpronoun\n"
    "it\tpronoun\n"
    "we\tpronoun\n"
    "they\tpronoun\n"
    "me\tpronoun\n"
    "him\tpronoun\n"
    "them\tpronoun\n"
    "us\tpronoun\n"
    "mine\tpronoun\n"
    "yours\tpronoun\n"
    "hers\tpronoun\n"
    "ours\tpronoun\n"
    "theirs\tpronoun\n"
    "myself\tpronoun\n"
    "yourself\tpronoun\n"
    "himself\tpronoun\n"
    "herself\tpronoun\n"
    "itself\tpronoun\n"
    "ourselves\tpronoun\n"
    "yourselves\tpronoun\n"
    "themselves\tpronoun\n"
    "who\tpronoun\n"
    "whom\tpronoun\n"
    "whoever\tpronoun\n"
    "somebody\tpronoun\n"
    "someone\tpronoun\n"
    "anybody\tpronoun\n"
    "anyone\tpronoun\n"
    "everybody\tpronoun\n"
    "everyone\tpronoun\n"
    "nobody\tpronoun\n"
    "nothing\tpronoun\n"
    "something\tpronoun\n"
    "anything\tpronoun\n"
    "everything\tpronoun\n"
    "none\tpronoun\n"
    "# prepositions\n"
    "of\tpreposition\n"
    "in\tpreposition\n"
    "to\tpreposition\n"
    "for\tpreposition\n"
    "with\tpreposition\n"
    "on\tpreposition\n"
    "at\tpreposition\n"
    "by\tpreposition\n"
    "from\tpreposition\n"
    "up\tpreposition\n"
    "about\tpreposition\n"
    "into\tpreposition\n"
    "over\tpreposition\n"
    "after\tpreposition\n"
    "beneath\tpreposition\n"
    "under\tpreposition\n"
    "above\tpreposition\n"
    "across\tpreposition\n"
    "against\tpreposition\n"
    "along\tpreposition\n"
    "among\tpreposition\n"
    "around\tpreposition\n"
    "before\tpreposition\n"
    "behind\tpreposition\n"
    "below\tpreposition\n"
    "beside\tpreposition\n"
    "besides\tpreposition\n"
    "between\tpreposition\n"
    "beyond\tpreposition\n"
    "during\tpreposition\n"
    "except\tpreposition\n"
    "inside\tpreposition\n"
    "near\tpreposition\n"
    "off\tpreposition\n"
    "onto\tpreposition\n"
    "outside\tpreposition\n"
    "past\tpreposition\n"
    "since\tpreposition\n"
    "through\tpreposition\n"
    "throughout\tpreposition\n"
    "till\tpreposition\n"
    "toward\tpreposition\n"
    "towards\tpreposition\n"
    "underneath\tpreposition\n"
    "until\tpreposition\n"
    "unto\tpreposition\n"
    "upon\tpreposition\n"
    "within\tpreposition\n"
    "without\tpreposition\n"
    "via\tpreposition\n"
    "per\tpreposition\n"
    "down\tpreposition\n"
    "out\tpreposition\n"
    "amid\tpreposition\n"
    "despite\tpreposition\n"
    "regarding\tpreposition\n"
    "concerning\tpreposition\n"
    "# conjunctions\n"
    "and\tconjunction\n"
    "but\tconjunction\n"
    "or\tconjunction\n"
    "nor\tconjunction\n"
    "so\tconjunction\n"
    "yet\tconjunction\n"
    "because\tconjunction\n"
    "although\tconjunction\n"
    "though\tconjunction\n"
    "while\tconjunction\n"
    "whereas\tconjunction\n"
    "if\tconjunction\n"
    "unless\tconjunction\n"
    "whether\tconjunction\n"
    "than\tconjunction\n"
    "as\tconjunction\n"
    "when\tconjunction\n"
    "whenever\tconjunction\n"
    "where\tconjunction\n"
    "wherever\tconjunction\n"
    "once\tconjunction\n"
    "# interjections\n"
    "oh\tinterjection\n"
    "wow\tinterjection\n"
    "hey\tinterjection\n"
    "yeah\tinterjection\n"
    "yep\tinterjection\n"
    "nope\tinterjection\n"
    "ok\tinterjection\n"
    "okay\tinterjection\n"
    "hmm\tinterjection\n"
    "ugh\tinterjection\n"
    "lol\tinterjection\n"
    "omg\tinterjection\n"
    "haha\tinterjection\n"
    "yay\tinterjection\n"
    "oops\tinterjection\n"
    "alas\tinterjection\n"
    "hello\tinterjection\n"
    "hi\tinterjection\n"
    "bye\tinterjection\n"
    "please\tinterjection\n"
    "thanks\tinterjection\n"
    "congrats\tinterjection\n"
    "whoa\tinterjection\n"
    "meh\tinterjection\n"
    "huh\tinterjection\n"
    "# numerals\n"
    "zero\tnumeral\n"
    "one\tnumeral\n"
    "two\tnumeral\n"
    "three\tnumeral\n"
    "four\tnumeral\n"
    "five\tnumeral\n"
    "six\tnumeral\n"
    "seven\tnumeral\n"
    "eight\tnumeral\n"
    "nine\tnumeral\n"
    "ten\tnumeral\n"
    "eleven\tnumeral\n"
    "twelve\tnumeral\n"
    "thirteen\tnumeral\n"
    "fourteen\tnumeral\n"
    "fifteen\tnumeral\n"
    "sixteen\tnumeral\n"
    "seventeen\tnumeral\n"
    "eighteen\tnumeral\n"
    "nineteen\tnumeral\n"
    "twenty\tnumeral\n"
    "thirty\tnumeral\n"
    "forty\tnumeral\n"
    "fifty\tnumeral\n"
    "sixty\tnumeral\n"
    "seventy\tnumeral\n"
    "eighty\tnumeral\n"
    "ninety\tnumeral\n"
    "hundred\tnumeral\n"
    "thousand\tnumeral\n"
    "million\tnumeral\n"
    "billion\tnumeral\n"
    "trillion\tnumeral\n"
    "first\tnumeral\n"
    "second\tnumeral\n"
    "third\tnumeral\n"
    "fourth\tnumeral\n"
    "fifth\tnumeral\n"
    "sixth\tnumeral\n"
    "seventh\tnumeral\n"
    "eighth\tnumeral\n"
    "ninth\tnumeral\n"
    "tenth\tnumeral\n"
    "dozen\tnumeral\n"
    "half\tnumeral\n"
    "quarter\tnumeral\n"
    "# auxiliary and light verbs\n"
    "be\tverb\n"
    "am\tverb\n"
    "is\tverb\n"
    "are\tverb\n"
    "was\tverb\n"
    "were\tverb\n"
    "been\tverb\n"
    "being\tverb\n"
    "have\tverb\n"
    "has\tverb\n"
    "had\tverb\n"
    "having\tverb\n"
    "do\tverb\n"
    "does\tverb\n"
    "did\tverb\n"
    "doing\tverb\n"
    "done\tverb\n"
    "will\tverb\n"
    "would\tverb\n"
    "can\tverb\n"
    "could\tverb\n"
    "shall\tverb\n"
    "should\tverb\n"
    "may\tverb\n"
    "might\tverb\n"
    "must\tverb\n"
    "ought\tverb\n"
    "need\tverb\n"
    "dare\tverb\n"
    "get\tverb\n"
    "gets\tverb\n"
    "got\tverb\n"
    "gotten\tverb\n"
    "# adverbs\n"
    "not\tadverb\n"
    "never\tadverb\n"
    "always\tadverb\n"
    "often\tadverb\n"
    "sometimes\tadverb\n"
    "usually\tadverb\n"
    "rarely\tadverb\n"
    "seldom\tadverb\n"
    "now\tadverb\n"
    "then\tadverb\n"
    "here\tadverb\n"
    "there\tadverb\n"
    "today\tadverb\n"
    "tomorrow\tadverb\n"
    "yesterday\tadverb\n"
    "soon\tadverb\n"
    "later\tadverb\n"
    "early\tadverb\n"
    "very\tadverb\n"
    "too\tadverb\n"
    "quite\tadverb\n"
    "rather\tadverb\n"
    "almost\tadverb\n"
    "nearly\tadverb\n"
    "just\tadverb\n"
    "only\tadverb\n"
    "even\tadverb\n"
    "still\tadverb\n"
    "already\tadverb\n"
    "again\tadverb\n"
    "also\tadverb\n"
    "maybe\tadverb\n"
    "perhaps\tadverb\n"
    "really\tadverb\n"
    "truly\tadverb\n"
    "actually\tadverb\n"
    "finally\tadverb\n"
    "suddenly\tadverb\n"
    "together\tadverb\n"
    "apart\tadverb\n"
    "away\tadverb\n"
    "back\tadverb\n"
    "forward\tadverb\n"
    "forever\tadverb\n"
    "everywhere\tadverb\n"
    "anywhere\tadverb\n"
    "somewhere\tadverb\n"
    "nowhere\tadverb\n"
    "online\tadverb\n"
    "offline\tadverb\n"
    "however\tadverb\n"
    "therefore\tadverb\n"
    "moreover\tadverb\n"
    "meanwhile\tadverb\n"
    "instead\tadverb\n"
    "otherwise\tadverb\n"
    "anyway\tadverb\n"
    "indeed\tadverb\n"
    "certainly\tadverb\n"
    "probably\tadverb\n"
    "possibly\tadverb\n"
    "definitely\tadverb\n"
    "honestly\tadverb\n"
    "basically\tadverb\n"
    "literally\tadverb\n"
    "seriously\tadverb\n"
    "totally\tadverb\n"
    "absolutely\tadverb\n"
    "completely\tadverb\n"
    "extremely\tadverb\n"
    "highly\tadverb\n"
    "deeply\tadverb\n"
    "widely\tadverb\n"
    "quickly\tadverb\n"
    "slowly\tadverb\n"
    "carefully\tadverb\n"
    "easily\tadverb\n"
    "hardly\tadverb\n"
    "barely\tadverb\n"
    "daily\tadverb\n"
    "weekly\tadverb\n"
    "monthly\tadverb\n"
    "yearly\tadverb\n"
    "twice\tadverb\n"
    "else\tadverb\n"
    "ever\tadverb\n"
    "well\tadverb\n"
    "ahead\tadverb\n"
    "abroad\tadverb\n"
    "upstairs\tadverb\n"
    "downstairs\tadverb\n"
    "outdoors\tadverb\n"
    "indoors\tadverb\n"
    "overseas\tadverb\n"
    "why\tadverb\n"
    "how\tadverb\n"
    "# social media nouns\n"
    "user\tnoun\n"
    "users\tnoun\n"
    "post\tnoun\n"
    "posts\tnoun\n"
    "feed\tnoun\n"
    "feeds\tnoun\n"
    "meme\tnoun\n"
    "memes\tnoun\n"
    "hashtag\tnoun\n"
    "hashtags\tnoun\n"
    "follower\tnoun\n"
    "followers\tnoun\n"
    "influencer\tnoun\n"
    "influencers\tnoun\n"
    "platform\tnoun\n"
    "platforms\tnoun\n"
    "trend\tnoun\n"
    "trends\tnoun\n"
    "thread\tnoun\n"
    "threads\tnoun\n"
    "tweet\tnoun\n"
    "tweets\tnoun\n"
    "profile\tnoun\n"
    "profiles\tnoun\n"
    "account\tnoun\n"
    "accounts\tnoun\n"
    "content\tnoun\n"
    "video\tnoun\n"
    "videos\tnoun\n"
    "photo\tnoun\n"
    "photos\tnoun\n"
    "picture\tnoun\n"
    "pictures\tnoun\n"
    "image\tnoun\n"
    "images\tnoun\n"
    "story\tnoun\n"
    "stories\tnoun\n"
    "comment\tnoun\n"
    "comments\tnoun\n"
    "reply\tnoun\n"
    "replies\tnoun\n"
    "share\tnoun\n"
    "shares\tnoun\n"
    "timeline\tnoun\n"
    "notification\tnoun\n"
    "notifications\tnoun\n"
    "message\tnoun\n"
    "messages\tnoun\n"
    "chat\tnoun\n"
    "chats\tnoun\n"
    "emoji\tnoun\n"
    "emojis\tnoun\n"
    "avatar\tnoun\n"
    "avatars\tnoun\n"
    "bio\tnoun\n"
    "link\tnoun\n"
    "links\tnoun\n"
    "click\tnoun\n"
    "clicks\tnoun\n"
    "view\tnoun\n"
    "views\tnoun\n"
    "engagement\tnoun\n"
    "reach\tnoun\n"
    "algorithm\tnoun\n"
    "algorithms\tnoun\n"
    "community\tnoun\n"
    "communities\tnoun\n"
    "group\tnoun\n"
    "groups\tnoun\n"
    "page\tnoun\n"
    "pages\tnoun\n"
    "channel\tnoun\n"
    "channels\tnoun\n"
    "subscriber\tnoun\n"
    "subscribers\tnoun\n"
    "stream\tnoun\n"
    "streams\tnoun\n"
    "clip\tnoun\n"
    "clips\tnoun\n"
    "caption\tnoun\n"
    "captions\tnoun\n"
    "tag\tnoun\n"
    "tags\tnoun\n"
    "mention\tnoun\n"
    "mentions\tnoun\n"
    "status\tnoun\n"
    "update\tnoun\n"
    "updates\tnoun\n"
    "app\tnoun\n"
    "apps\tnoun\n"
    "phone\tnoun\n"
    "phones\tnoun\n"
    "device\tnoun\n"
    "devices\tnoun\n"
    "screen\tnoun\n"
    "screens\tnoun\n"
    "internet\tnoun\n"
    "web\tnoun\n"
    "website\tnoun\n"
    "websites\tnoun\n"
    "blog\tnoun\n"
    "blogs\tnoun\n"
    "vlog\tnoun\n"
    "vlogs\tnoun\n"
    "podcast\tnoun\n"
    "podcasts\tnoun\n"
    "livestream\tnoun\n"
    "creator\tnoun\n"
    "creators\tnoun\n"
    "audience\tnoun\n"
    "audiences\tnoun\n"
    "brand\tnoun\n"
    "brands\tnoun\n"
    "ad\tnoun\n"
    "ads\tnoun\n"
    "advertisement\tnoun\n"
    "marketing\tnoun\n"
    "campaign\tnoun\n"
    "campaigns\tnoun\n"
    "network\tnoun\n"
    "networks\tnoun\n"
    "media\tnoun\n"
    "data\tnoun\n"
    "privacy\tnoun\n"
    "security\tnoun\n"
    "password\tnoun\n"
    "passwords\tnoun\n"
    "username\tnoun\n"
    "usernames\tnoun\n"
    "login\tnoun\n"
    "logout\tnoun\n"
    "spam\tnoun\n"
    "bot\tnoun\n"
    "bots\tnoun\n"
    "troll\tnoun\n"
    "trolls\tnoun\n"
    "fan\tnoun\n"
    "fans\tnoun\n"
    "gif\tnoun\n"
    "gifs\tnoun\n"
    "sticker\tnoun\n"
    "stickers\tnoun\n"
    "poll\tnoun\n"
    "polls\tnoun\n"
    "quiz\tnoun\n"
    "quizzes\tnoun\n"
    "survey\tnoun\n"
    "surveys\tnoun\n"
    "debate\tnoun\n"
    "debates\tnoun\n"
    "discussion\tnoun\n"
    "discussions\tnoun\n"
    "conversation\tnoun\n"
    "conversations\tnoun\n"
    "opinion\tnoun\n"
    "opinions\tnoun\n"
    "viewpoint\tnoun\n"
    "viewpoints\tnoun\n"
    "perspective\tnoun\n"
    "perspectives\tnoun\n"
    "feedback\tnoun\n"
    "review\tnoun\n"
    "reviews\tnoun\n"
    "rating\tnoun\n"
    "ratings\tnoun\n"
    "star\tnoun\n"
    "stars\tnoun\n"
    "score\tnoun\n"
    "scores\tnoun\n"
    "rank\tnoun\n"
    "ranks\tnoun\n"
    "ranking\tnoun\n"
    "rankings\tnoun\n"
    "leaderboard\tnoun\n"
    "news\tnoun\n"
    "headline\tnoun\n"
    "headlines\tnoun\n"
    "article\tnoun\n"
    "articles\tnoun\n"
    "report\tnoun\n"
    "reports\tnoun\n"
    "source\tnoun\n"
    "sources\tnoun\n"
    "fact\tnoun\n"
    "facts\tnoun\n"
    "rumor\tnoun\n"
    "rumors\tnoun\n"
    "gossip\tnoun\n"
    "scandal\tnoun\n"
    "scandals\tnoun\n"
    "drama\tnoun\n"
    "controversy\tnoun\n"
    "controversies\tnoun\n"
    "topic\tnoun\n"
    "topics\tnoun\n"
    "subject\tnoun\n"
    "subjects\tnoun\n"
    "theme\tnoun\n"
    "themes\tnoun\n"
    "issue\tnoun\n"
    "issues\tnoun\n"
    "event\tnoun\n"
    "events\tnoun\n"
    "moment\tnoun\n"
    "moments\tnoun\n"
    "highlight\tnoun\n"
    "highlights\tnoun\n"
    "recap\tnoun\n"
    "recaps\tnoun\n"
    "summary\tnoun\n"
    "summaries\tnoun\n"
    "# general nouns\n"
    "time\tnoun\n"
    "times\tnoun\n"
    "year\tnoun\n"
    "years\tnoun\n"
    "month\tnoun\n"
    "months\tnoun\n"
    "week\tnoun\n"
    "weeks\tnoun\n"
    "day\tnoun\n"
    "days\tnoun\n"
    "hour\tnoun\n"
    "hours\tnoun\n"
    "minute\tnoun\n"
    "minutes\tnoun\n"
    "people\tnoun\n"
    "person\tnoun\n"
    "man\tnoun\n"
    "men\tnoun\n"
    "woman\tnoun\n"
    "women\tnoun\n"
    "child\tnoun\n"
    "children\tnoun\n"
    "boy\tnoun\n"
    "boys\tnoun\n"
    "girl\tnoun\n"
    "girls\tnoun\n"
    "friend\tnoun\n"
    "friends\tnoun\n"
    "family\tnoun\n"
    "families\tnoun\n"
    "parent\tnoun\n"
    "parents\tnoun\n"
    "mother\tnoun\n"
    "father\tnoun\n"
    "brother\tnoun\n"
    "sister\tnoun\n"
    "baby\tnoun\n"
    "babies\tnoun\n"
    "student\tnoun\n"
    "students\tnoun\n"
    "teacher\tnoun\n"
    "teachers\tnoun\n"
    "school\tnoun\n"
    "schools\tnoun\n"
    "class\tnoun\n"
    "classes\tnoun\n"
    "college\tnoun\n"
    "university\tnoun\n"
    "universities\tnoun\n"
    "work\tnoun\n"
    "job\tnoun\n"
    "jobs\tnoun\n"
    "career\tnoun\n"
    "careers\tnoun\n"
    "business\tnoun\n"
    "businesses\tnoun\n"
    "company\tnoun\n"
    "companies\tnoun\n"
    "office\tnoun\n"
    "offices\tnoun\n"
    "money\tnoun\n"
    "cash\tnoun\n"
    "price\tnoun\n"
    "prices\tnoun\n"
    "cost\tnoun\n"
    "costs\tnoun\n"
    "market\tnoun\n"
    "markets\tnoun\n"
    "economy\tnoun\n"
    "industry\tnoun\n"
    "industries\tnoun\n"
    "product\tnoun\n"
    "products\tnoun\n"
    "service\tnoun\n"
    "services\tnoun\n"
    "customer\tnoun\n"
    "customers\tnoun\n"
    "client\tnoun\n"
    "clients\tnoun\n"
    "world\tnoun\n"
    "country\tnoun\n"
    "countries\tnoun\n"
    "city\tnoun\n"
    "cities\tnoun\n"
    "town\tnoun\n"
    "towns\tnoun\n"
    "state\tnoun\n"
    "states\tnoun\n"
    "nation\tnoun\n"
    "nations\tnoun\n"
    "government\tnoun\n"
    "governments\tnoun\n"
    "law\tnoun\n"
    "laws\tnoun\n"
    "rule\tnoun\n"
    "rules\tnoun\n"
    "policy\tnoun\n"
    "policies\tnoun\n"
    "politics\tnoun\n"
    "election\tnoun\n"
    "elections\tnoun\n"
    "vote\tnoun\n"
    "votes\tnoun\n"
    "voter\tnoun\n"
    "voters\tnoun\n"
    "president\tnoun\n"
    "leader\tnoun\n"
    "leaders\tnoun\n"
    "power\tnoun\n"
    "powers\tnoun\n"
    "war\tnoun\n"
    "wars\tnoun\n"
    "peace\tnoun\n"
    "history\tnoun\n"
    "culture\tnoun\n"
    "cultures\tnoun\n"
    "art\tnoun\n"
    "arts\tnoun\n"
    "music\tnoun\n"
    "song\tnoun\n"
    "songs\tnoun\n"
    "movie\tnoun\n"
    "movies\tnoun\n"
    "film\tnoun\n"
    "films\tnoun\n"
    "show\tnoun\n"
    "shows\tnoun\n"
    "game\tnoun\n"
    "games\tnoun\n"
    "sport\tnoun\n"
    "sports\tnoun\n"
    "team\tnoun\n"
    "teams\tnoun\n"
    "player\tnoun\n"
    "players\tnoun\n"
    "coach\tnoun\n"
    "coaches\tnoun\n"
    "match\tnoun\n"
    "matches\tnoun\n"
    "race\tnoun\n"
    "races\tnoun\n"
    "goal\tnoun\n"
    "goals\tnoun\n"
    "loss\tnoun\n"
    "losses\tnoun\n"
    "point\tnoun\n"
    "points\tnoun\n"
    "number\tnoun\n"
    "numbers\tnoun\n"
    "problem\tnoun\n"
    "problems\tnoun\n"
    "question\tnoun\n"
    "questions\tnoun\n"
    "answer\tnoun\n"
    "answers\tnoun\n"
    "idea\tnoun\n"
    "ideas\tnoun\n"
    "thought\tnoun\n"
    "thoughts\tnoun\n"
    "mind\tnoun\n"
    "minds\tnoun\n"
    "brain\tnoun\n"
    "brains\tnoun\n"
    "heart\tnoun\n"
    "hearts\tnoun\n"
    "body\tnoun\n"
    "bodies\tnoun\n"
    "hand\tnoun\n"
    "hands\tnoun\n"
    "head\tnoun\n"
    "heads\tnoun\n"
    "eye\tnoun\n"
    "eyes\tnoun\n"
    "face\tnoun\n"
    "faces\tnoun\n"
    "voice\tnoun\n"
    "voices\tnoun\n"
    "word\tnoun\n"
    "words\tnoun\n"
    "language\tnoun\n"
    "languages\tnoun\n"
    "name\tnoun\n"
    "names\tnoun\n"
    "letter\tnoun\n"
    "letters\tnoun\n"
    "book\tnoun\n"
    "books\tnoun\n"
    "paper\tnoun\n"
    "papers\tnoun\n"
    "pen\tnoun\n"
    "pencil\tnoun\n"
    "note\tnoun\n"
    "notes\tnoun\n"
    "list\tnoun\n"
    "lists\tnoun\n"
    "plan\tnoun\n"
    "plans\tnoun\n"
    "project\tnoun\n"
    "projects\tnoun\n"
    "task\tnoun\n"
    "tasks\tnoun\n"
    "result\tnoun\n"
    "results\tnoun\n"
    "effect\tnoun\n"
    "effects\tnoun\n"
    "cause\tnoun\n"
    "causes\tnoun\n"
    "reason\tnoun\n"
    "reasons\tnoun\n"
    "way\tnoun\n"
    "ways\tnoun\n"
    "method\tnoun\n"
    "methods\tnoun\n"
    "system\tnoun\n"
    "systems\tnoun\n"
    "process\tnoun\n"
    "processes\tnoun\n"
    "step\tnoun\n"
    "steps\tnoun\n"
    "part\tnoun\n"
    "parts\tnoun\n"
    "piece\tnoun\n"
    "pieces\tnoun\n"
    "thing\tnoun\n"
    "things\tnoun\n"
    "stuff\tnoun\n"
    "object\tnoun\n"
    "objects\tnoun\n"
    "item\tnoun\n"
    "items\tnoun\n"
    "kind\tnoun\n"
    "kinds\tnoun\n"
    "type\tnoun\n"
    "types\tnoun\n"
    "example\tnoun\n"
    "examples\tnoun\n"
    "case\tnoun\n"
    "cases\tnoun\n"
    "place\tnoun\n"
    "places\tnoun\n"
    "area\tnoun\n"
    "areas\tnoun\n"
    "region\tnoun\n"
    "regions\tnoun\n"
    "location\tnoun\n"
    "locations\tnoun\n"
    "home\tnoun\n"
    "homes\tnoun\n"
    "house\tnoun\n"
    "houses\tnoun\n"
    "room\tnoun\n"
    "rooms\tnoun\n"
    "door\tnoun\n"
    "doors\tnoun\n"
    "window\tnoun\n"
    "windows\tnoun\n"
    "wall\tnoun\n"
    "walls\tnoun\n"
    "floor\tnoun\n"
    "floors\tnoun\n"
    "roof\tnoun\n"
    "table\tnoun\n"
    "tables\tnoun\n"
    "chair\tnoun\n"
    "chairs\tnoun\n"
    "bed\tnoun\n"
    "beds\tnoun\n"
    "kitchen\tnoun\n"
    "bathroom\tnoun\n"
    "garden\tnoun\n"
    "gardens\tnoun\n"
    "yard\tnoun\n"
    "yards\tnoun\n"
    "street\tnoun\n"
    "streets\tnoun\n"
    "road\tnoun\n"
    "roads\tnoun\n"
    "path\tnoun\n"
    "paths\tnoun\n"
    "car\tnoun\n"
    "cars\tnoun\n"
    "bus\tnoun\n"
    "buses\tnoun\n"
    "train\tnoun\n"
    "trains\tnoun\n"
    "plane\tnoun\n"
    "planes\tnoun\n"
    "ship\tnoun\n"
    "ships\tnoun\n"
    "bike\tnoun\n"
    "bikes\tnoun\n"
    "trip\tnoun\n"
    "trips\tnoun\n"
    "vacation\tnoun\n"
    "vacations\tnoun\n"
    "holiday\tnoun\n"
    "holidays\tnoun\n"
    "weekend\tnoun\n"
    "weekends\tnoun\n"
    "morning\tnoun\n"
    "mornings\tnoun\n"
    "afternoon\tnoun\n"
    "evening\tnoun\n"
    "evenings\tnoun\n"
    "night\tnoun\n"
    "nights\tnoun\n"
    "midnight\tnoun\n"
    "noon\tnoun\n"
    "food\tnoun\n"
    "foods\tnoun\n"
    "meal\tnoun\n"
    "meals\tnoun\n"
    "breakfast\tnoun\n"
    "lunch\tnoun\n"
    "dinner\tnoun\n"
    "snack\tnoun\n"
    "snacks\tnoun\n"
    "drink\tnoun\n"
    "drinks\tnoun\n"
    "water\tnoun\n"
    "coffee\tnoun\n"
    "tea\tnoun\n"
    "milk\tnoun\n"
    "juice\tnoun\n"
    "beer\tnoun\n"
    "wine\tnoun\n"
    "bread\tnoun\n"
    "butter\tnoun\n"
    "cheese\tnoun\n"
    "egg\tnoun\n"
    "eggs\tnoun\n"
    "meat\tnoun\n"
    "chicken\tnoun\n"
    "fish\tnoun\n"
    "rice\tnoun\n"
    "pasta\tnoun\n"
    "pizza\tnoun\n"
    "burger\tnoun\n"
    "fries\tnoun\n"
    "salad\tnoun\n"
    "fruit\tnoun\n"
    "fruits\tnoun\n"
    "apple\tnoun\n"
    "apples\tnoun\n"
    "banana\tnoun\n"
    "bananas\tnoun\n"
    "orange\tnoun\n"
    "oranges\tnoun\n"
    "grape\tnoun\n"
    "grapes\tnoun\n"
    "berry\tnoun\n"
    "berries\tnoun\n"
    "vegetable\tnoun\n"
    "vegetables\tnoun\n"
    "potato\tnoun\n"
    "potatoes\tnoun\n"
    "tomato\tnoun\n"
    "tomatoes\tnoun\n"
    "onion\tnoun\n"
    "onions\tnoun\n"
    "carrot\tnoun\n"
    "carrots\tnoun\n"
    "sugar\tnoun\n"
    "salt\tnoun\n"
    "pepper\tnoun\n"
    "spice\tnoun\n"
    "spices\tnoun\n"
    "taste\tnoun\n"
    "tastes\tnoun\n"
    "smell\tnoun\n"
    "smells\tnoun\n"
    "animal\tnoun\n"
    "animals\tnoun\n"
    "dog\tnoun\n"
    "dogs\tnoun\n"
    "cat\tnoun\n"
    "cats\tnoun\n"
    "bird\tnoun\n"
    "birds\tnoun\n"
    "horse\tnoun\n"
    "horses\tnoun\n"
    "cow\tnoun\n"
    "cows\tnoun\n"
    "pig\tnoun\n"
    "pigs\tnoun\n"
    "sheep\tnoun\n"
    "goat\tnoun\n"
    "goats\tnoun\n"
    "lion\tnoun\n"
    "lions\tnoun\n"
    "tiger\tnoun\n"
    "tigers\tnoun\n"
    "bear\tnoun\n"
    "bears\tnoun\n"
    "wolf\tnoun\n"
    "wolves\tnoun\n"
    "fox\tnoun\n"
    "foxes\tnoun\n"
    "rabbit\tnoun\n"
    "rabbits\tnoun\n"
    "mouse\tnoun\n"
    "mice\tnoun\n"
    "rat\tnoun\n"
    "rats\tnoun\n"
    "snake\tnoun\n"
    "snakes\tnoun\n"
    "frog\tnoun\n"
    "frogs\tnoun\n"
    "insect\tnoun\n"
    "insects\tnoun\n"
    "bee\tnoun\n"
    "bees\tnoun\n"
    "ant\tnoun\n"
    "ants\tnoun\n"
    "spider\tnoun\n"
    "spiders\tnoun\n"
    "butterfly\tnoun\n"
    "butterflies\tnoun\n"
    "tree\tnoun\n"
    "trees\tnoun\n"
    "flower\tnoun\n"
    "flowers\tnoun\n"
    "grass\tnoun\n"
    "leaf\tnoun\n"
    "leaves\tnoun\n"
    "plant\tnoun\n"
    "plants\tnoun\n"
    "forest\tnoun\n"
    "forests\tnoun\n"
    "mountain\tnoun\n"
    "mountains\tnoun\n"
    "hill\tnoun\n"
    "hills\tnoun\n"
    "river\tnoun\n"
    "rivers\tnoun\n"
    "lake\tnoun\n"
    "lakes\tnoun\n"
    "sea\tnoun\n"
    "seas\tnoun\n"
    "ocean\tnoun\n"
    "oceans\tnoun\n"
    "beach\tnoun\n"
    "beaches\tnoun\n"
    "island\tnoun\n"
    "islands\tnoun\n"
    "desert\tnoun\n"
    "deserts\tnoun\n"
    "sky\tnoun\n"
    "skies\tnoun\n"
    "cloud\tnoun\n"
    "clouds\tnoun\n"
    "rain\tnoun\n"
    "snow\tnoun\n"
    "wind\tnoun\n"
    "storm\tnoun\n"
    "storms\tnoun\n"
    "thunder\tnoun\n"
    "lightning\tnoun\n"
    "sun\tnoun\n"
    "moon\tnoun\n"
    "planet\tnoun\n"
    "planets\tnoun\n"
    "earth\tnoun\n"
    "space\tnoun\n"
    "universe\tnoun\n"
    "galaxy\tnoun\n"
    "galaxies\tnoun\n"
    "weather\tnoun\n"
    "climate\tnoun\n"
    "temperature\tnoun\n"
    "temperatures\tnoun\n"
    "season\tnoun\n"
    "seasons\tnoun\n"
    "spring\tnoun\n"
    "summer\tnoun\n"
    "autumn\tnoun\n"
    "winter\tnoun\n"
    "fire\tnoun\n"
    "fires\tnoun\n"
    "ice\tnoun\n"
    "heat\tnoun\n"
    "light\tnoun\n"
    "lights\tnoun\n"
    "darkness\tnoun\n"
    "color\tnoun\n"
    "colors\tnoun\n"
    "sound\tnoun\n"
    "sounds\tnoun\n"
    "noise\tnoun\n"
    "noises\tnoun\n"
    "energy\tnoun\n"
    "force\tnoun\n"
    "forces\tnoun\n"
    "speed\tnoun\n"
    "speeds\tnoun\n"
    "weight\tnoun\n"
    "weights\tnoun\n"
    "size\tnoun\n"
    "sizes\tnoun\n"
    "shape\tnoun\n"
    "shapes\tnoun\n"
    "line\tnoun\n"
    "lines\tnoun\n"
    "circle\tnoun\n"
    "circles\tnoun\n"
    "square\tnoun\n"
    "squares\tnoun\n"
    "triangle\tnoun\n"
    "triangles\tnoun\n"
    "angle\tnoun\n"
    "angles\tnoun\n"
    "distance\tnoun\n"
    "distances\tnoun\n"
    "length\tnoun\n"
    "lengths\tnoun\n"
    "height\tnoun\n"
    "heights\tnoun\n"
    "width\tnoun\n"
    "widths\tnoun\n"
    "depth\tnoun\n"
    "depths\tnoun\n"
    "science\tnoun\n"
    "sciences\tnoun\n"
    "physics\tnoun\n"
    "chemistry\tnoun\n"
    "biology\tnoun\n"
    "math\tnoun\n"
    "mathematics\tnoun\n"
    "technology\tnoun\n"
    "technologies\tnoun\n"
    "computer\tnoun\n"
    "computers\tnoun\n"
    "software\tnoun\n"
    "hardware\tnoun\n"
    "code\tnoun\n"
    "codes\tnoun\n"
    "program\tnoun\n"
    "programs\tnoun\n"
    "machine\tnoun\n"
    "machines\tnoun\n"
    "robot\tnoun\n"
    "robots\tnoun\n"
    "engine\tnoun\n"
    "engines\tnoun\n"
    "tool\tnoun\n"
    "tools\tnoun\n"
    "instrument\tnoun\n"
    "instruments\tnoun\n"
    "material\tnoun\n"
    "materials\tnoun\n"
    "metal\tnoun\n"
    "metals\tnoun\n"
    "gold\tnoun\n"
    "silver\tnoun\n"
    "iron\tnoun\n"
    "steel\tnoun\n"
    "wood\tnoun\n"
    "glass\tnoun\n"
    "plastic\tnoun\n"
    "stone\tnoun\n"
    "stones\tnoun\n"
    "rock\tnoun\n"
    "rocks\tnoun\n"
    "sand\tnoun\n"
    "soil\tnoun\n"
    "dirt\tnoun\n"
    "dust\tnoun\n"
    "health\tnoun\n"
    "doctor\tnoun\n"
    "doctors\tnoun\n"
    "nurse\tnoun\n"
    "nurses\tnoun\n"
    "hospital\tnoun\n"
    "hospitals\tnoun\n"
    "medicine\tnoun\n"
    "medicines\tnoun\n"
    "disease\tnoun\n"
    "diseases\tnoun\n"
    "virus\tnoun\n"
    "viruses\tnoun\n"
    "vaccine\tnoun\n"
    "vaccines\tnoun\n"
    "pain\tnoun\n"
    "pains\tnoun\n"
    "injury\tnoun\n"
    "injuries\tnoun\n"
    "accident\tnoun\n"
    "accidents\tnoun\n"
    "emergency\tnoun\n"
    "emergencies\tnoun\n"
    "safety\tnoun\n"
    "danger\tnoun\n"
    "dangers\tnoun\n"
    "risk\tnoun\n"
    "risks\tnoun\n"
    "chance\tnoun\n"
    "chances\tnoun\n"
    "luck\tnoun\n"
    "fortune\tnoun\n"
    "hope\tnoun\n"
    "hopes\tnoun\n"
    "dream\tnoun\n"
    "dreams\tnoun\n"
    "fear\tnoun\n"
    "fears\tnoun\n"
    "worry\tnoun\n"
    "worries\tnoun\n"
    "stress\tnoun\n"
    "anxiety\tnoun\n"
    "joy\tnoun\n"
    "joys\tnoun\n"
    "happiness\tnoun\n"
    "sadness\tnoun\n"
    "anger\tnoun\n"
    "love\tnoun\n"
    "hate\tnoun\n"
    "trust\tnoun\n"
    "doubt\tnoun\n"
    "doubts\tnoun\n"
    "truth\tnoun\n"
    "truths\tnoun\n"
    "lie\tnoun\n"
    "lies\tnoun\n"
    "secret\tnoun\n"
    "secrets\tnoun\n"
    "surprise\tnoun\n"
    "surprises\tnoun\n"
    "gift\tnoun\n"
    "gifts\tnoun\n"
    "present\tnoun\n"
    "presents\tnoun\n"
    "party\tnoun\n"
    "parties\tnoun\n"
    "celebration\tnoun\n"
    "celebrations\tnoun\n"
    "wedding\tnoun\n"
    "weddings\tnoun\n"
    "birthday\tnoun\n"
    "birthdays\tnoun\n"
    "anniversary\tnoun\n"
    "festival\tnoun\n"
    "festivals\tnoun\n"
    "ceremony\tnoun\n"
    "ceremonies\tnoun\n"
    "tradition\tnoun\n"
    "traditions\tnoun\n"
    "religion\tnoun\n"
    "religions\tnoun\n"
    "church\tnoun\n"
    "churches\tnoun\n"
    "temple\tnoun\n"
    "temples\tnoun\n"
    "god\tnoun\n"
    "gods\tnoun\n"
    "soul\tnoun\n"
    "souls\tnoun\n"
    "spirit\tnoun\n"
    "spirits\tnoun\n"
    "life\tnoun\n"
    "lives\tnoun\n"
    "death\tnoun\n"
    "deaths\tnoun\n"
    "birth\tnoun\n"
    "births\tnoun\n"
    "age\tnoun\n"
    "ages\tnoun\n"
    "youth\tnoun\n"
    "adult\tnoun\n"
    "adults\tnoun\n"
    "elder\tnoun\n"
    "elders\tnoun\n"
    "generation\tnoun\n"
    "generations\tnoun\n"
    "society\tnoun\n"
    "societies\tnoun\n"
    "population\tnoun\n"
    "populations\tnoun\n"
    "crowd\tnoun\n"
    "crowds\tnoun\n"
    "neighbor\tnoun\n"
    "neighbors\tnoun\n"
    "stranger\tnoun\n"
    "strangers\tnoun\n"
    "guest\tnoun\n"
    "guests\tnoun\n"
    "visitor\tnoun\n"
    "visitors\tnoun\n"
    "member\tnoun\n"
    "members\tnoun\n"
    "partner\tnoun\n"
    "partners\tnoun\n"
    "couple\tnoun\n"
    "couples\tnoun\n"
    "marriage\tnoun\n"
    "marriages\tnoun\n"
    "divorce\tnoun\n"
    "relationship\tnoun\n"
    "relationships\tnoun\n"
    "friendship\tnoun\n"
    "friendships\tnoun\n"
    "crew\tnoun\n"
    "crews\tnoun\n"
    "staff\tnoun\n"
    "employee\tnoun\n"
    "employees\tnoun\n"
    "employer\tnoun\n"
    "employers\tnoun\n"
    "boss\tnoun\n"
    "bosses\tnoun\n"
    "manager\tnoun\n"
    "managers\tnoun\n"
    "director\tnoun\n"
    "directors\tnoun\n"
    "worker\tnoun\n"
    "workers\tnoun\n"
    "farmer\tnoun\n"
    "farmers\tnoun\n"
    "engineer\tnoun\n"
    "engineers\tnoun\n"
    "scientist\tnoun\n"
    "scientists\tnoun\n"
    "artist\tnoun\n"
    "artists\tnoun\n"
    "writer\tnoun\n"
    "writers\tnoun\n"
    "author\tnoun\n"
    "authors\tnoun\n"
    "singer\tnoun\n"
    "singers\tnoun\n"
    "actor\tnoun\n"
    "actors\tnoun\n"
    "dancer\tnoun\n"
    "dancers\tnoun\n"
    "lawyer\tnoun\n"
    "lawyers\tnoun\n"
    "judge\tnoun\n"
    "judges\tnoun\n"
    "police\tnoun\n"
    "officer\tnoun\n"
    "officers\tnoun\n"
    "soldier\tnoun\n"
    "soldiers\tnoun\n"
    "army\tnoun\n"
    "armies\tnoun\n"
    "navy\tnoun\n"
    "driver\tnoun\n"
    "drivers\tnoun\n"
    "pilot\tnoun\n"
    "pilots\tnoun\n"
    "chef\tnoun\n"
    "chefs\tnoun\n"
    "waiter\tnoun\n"
    "waitress\tnoun\n"
    "designer\tnoun\n"
    "designers\tnoun\n"
    "developer\tnoun\n"
    "developers\tnoun\n"
    "programmer\tnoun\n"
    "programmers\tnoun\n"
    "journalist\tnoun\n"
    "journalists\tnoun\n"
    "reporter\tnoun\n"
    "reporters\tnoun\n"
    "photographer\tnoun\n"
    "photographers\tnoun\n"
    "musician\tnoun\n"
    "musicians\tnoun\n"
    "athlete\tnoun\n"
    "athletes\tnoun\n"
    "champion\tnoun\n"
    "champions\tnoun\n"
    "hero\tnoun\n"
    "heroes\tnoun\n"
    "celebrity\tnoun\n"
    "celebrities\tnoun\n"
    "future\tnoun\n"
    "style\tnoun\n"
    "styles\tnoun\n"
    "end\tnoun\n"
    "ends\tnoun\n"
    "side\tnoun\n"
    "sides\tnoun\n"
    "top\tnoun\n"
    "bottom\tnoun\n"
    "middle\tnoun\n"
    "center\tnoun\n"
    "edge\tnoun\n"
    "edges\tnoun\n"
    "corner\tnoun\n"
    "corners\tnoun\n"
    "front\tnoun\n"
    "# verbs\n"
    "say\tverb\n"
    "says\tverb\n"
    "said\tverb\n"
    "tell\tverb\n"
    "tells\tverb\n"
    "told\tverb\n"
    "speak\tverb\n"
    "speaks\tverb\n"
    "spoke\tverb\n"
    "spoken\tverb\n"
    "talk\tverb\n"
    "talks\tverb\n"
    "talked\tverb\n"
    "ask\tverb\n"
    "asks\tverb\n"
    "asked\tverb\n"
    "call\tverb\n"
    "calls\tverb\n"
    "called\tverb\n"
    "write\tverb\n"
    "writes\tverb\n"
    "wrote\tverb\n"
    "written\tverb\n"
    "read\tverb\n"
    "reads\tverb\n"
    "listen\tverb\n"
    "listens\tverb\n"
    "listened\tverb\n"
    "hear\tverb\n"
    "hears\tverb\n"
    "heard\tverb\n"
    "see\tverb\n"
    "sees\tverb\n"
    "saw\tverb\n"
    "seen\tverb\n"
    "look\tverb\n"
    "looks\tverb\n"
    "looked\tverb\n"
    "watch\tverb\n"
    "watches\tverb\n"
    "watched\tverb\n"
    "observe\tverb\n"
    "observes\tverb\n"
    "notice\tverb\n"
    "notices\tverb\n"
    "find\tverb\n"
    "finds\tverb\n"
    "found\tverb\n"
    "search\tverb\n"
    "searches\tverb\n"
    "searched\tverb\n"
    "seek\tverb\n"
    "sought\tverb\n"
    "discover\tverb\n"
    "discovers\tverb\n"
    "explore\tverb\n"
    "explores\tverb\n"
    "learn\tverb\n"
    "learns\tverb\n"
    "learned\tverb\n"
    "teach\tverb\n"
    "teaches\tverb\n"
    "taught\tverb\n"
    "study\tverb\n"
    "studies\tverb\n"
    "studied\tverb\n"
    "know\tverb\n"
    "knows\tverb\n"
    "knew\tverb\n"
    "known\tverb\n"
    "understand\tverb\n"
    "understands\tverb\n"
    "understood\tverb\n"
    "think\tverb\n"
    "thinks\tverb\n"
    "believe\tverb\n"
    "believes\tverb\n"
    "believed\tverb\n"
    "remember\tverb\n"
    "remembers\tverb\n"
    "forget\tverb\n"
    "forgets\tverb\n"
    "forgot\tverb\n"
    "imagine\tverb\n"
    "imagines\tverb\n"
    "wonder\tverb\n"
    "wonders\tverb\n"
    "guess\tverb\n"
    "guesses\tverb\n"
    "decide\tverb\n"
    "decides\tverb\n"
    "decided\tverb\n"
    "choose\tverb\n"
    "chooses\tverb\n"
    "chose\tverb\n"
    "chosen\tverb\n"
    "prepare\tverb\n"
    "prepares\tverb\n"
    "try\tverb\n"
    "tries\tverb\n"
    "tried\tverb\n"
    "attempt\tverb\n"
    "attempts\tverb\n"
    "begin\tverb\n"
    "begins\tverb\n"
    "began\tverb\n"
    "begun\tverb\n"
    "start\tverb\n"
    "starts\tverb\n"
    "started\tverb\n"
    "finish\tverb\n"
    "finishes\tverb\n"
    "finished\tverb\n"
    "continue\tverb\n"
    "continues\tverb\n"
    "continued\tverb\n"
    "stop\tverb\n"
    "stops\tverb\n"
    "stopped\tverb\n"
    "pause\tverb\n"
    "pauses\tverb\n"
    "wait\tverb\n"
    "waits\tverb\n"
    "waited\tverb\n"
    "stay\tverb\n"
    "stays\tverb\n"
    "stayed\tverb\n"
    "leave\tverb\n"
    "left\tverb\n"
    "arrive\tverb\n"
    "arrives\tverb\n"
    "arrived\tverb\n"
    "come\tverb\n"
    "comes\tverb\n"
    "came\tverb\n"
    "go\tverb\n"
    "goes\tverb\n"
    "went\tverb\n"
    "gone\tverb\n"
    "move\tverb\n"
    "moves\tverb\n"
    "moved\tverb\n"
    "walk\tverb\n"
    "walks\tverb\n"
    "walked\tverb\n"
    "run\tverb\n"
    "runs\tverb\n"
    "ran\tverb\n"
    "running\tverb\n"
    "jump\tverb\n"
    "jumps\tverb\n"
    "jumped\tverb\n"
    "climb\tverb\n"
    "climbs\tverb\n"
    "fall\tverb\n"
    "falls\tverb\n"
    "fell\tverb\n"
    "fallen\tverb\n"
    "rise\tverb\n"
    "rises\tverb\n"
    "rose\tverb\n"
    "risen\tverb\n"
    "stand\tverb\n"
    "stands\tverb\n"
    "stood\tverb\n"
    "sit\tverb\n"
    "sits\tverb\n"
    "sat\tverb\n"
    "sleep\tverb\n"
    "sleeps\tverb\n"
    "slept\tverb\n"
    "wake\tverb\n"
    "wakes\tverb\n"
    "woke\tverb\n"
    "eat\tverb\n"
    "eats\tverb\n"
    "ate\tverb\n"
    "eaten\tverb\n"
    "cook\tverb\n"
    "cooks\tverb\n"
    "cooked\tverb\n"
    "bake\tverb\n"
    "bakes\tverb\n"
    "buy\tverb\n"
    "buys\tverb\n"
    "bought\tverb\n"
    "sell\tverb\n"
    "sells\tverb\n"
    "sold\tverb\n"
    "pay\tverb\n"
    "pays\tverb\n"
    "paid\tverb\n"
    "spend\tverb\n"
    "spends\tverb\n"
    "spent\tverb\n"
    "save\tverb\n"
    "saves\tverb\n"
    "saved\tverb\n"
    "earn\tverb\n"
    "earns\tverb\n"
    "earned\tverb\n"
    "owe\tverb\n"
    "owes\tverb\n"
    "own\tverb\n"
    "owns\tverb\n"
    "owned\tverb\n"
    "borrow\tverb\n"
    "borrows\tverb\n"
    "lend\tverb\n"
    "lends\tverb\n"
    "give\tverb\n"
    "gives\tverb\n"
    "gave\tverb\n"
    "given\tverb\n"
    "take\tverb\n"
    "takes\tverb\n"
    "took\tverb\n"
    "taken\tverb\n"
    "bring\tverb\n"
    "brings\tverb\n"
    "brought\tverb\n"
    "carry\tverb\n"
    "carries\tverb\n"
    "carried\tverb\n"
    "hold\tverb\n"
    "holds\tverb\n"
    "held\tverb\n"
    "keep\tverb\n"
    "keeps\tverb\n"
    "kept\tverb\n"
    "put\tverb\n"
    "puts\tverb\n"
    "set\tverb\n"
    "sets\tverb\n"
    "send\tverb\n"
    "sends\tverb\n"
    "sent\tverb\n"
    "receive\tverb\n"
    "receives\tverb\n"
    "received\tverb\n"
    "deliver\tverb\n"
    "delivers\tverb\n"
    "open\tverb\n"
    "opens\tverb\n"
    "opened\tverb\n"
    "close\tverb\n"
    "closes\tverb\n"
    "closed\tverb\n"
    "lock\tverb\n"
    "locks\tverb\n"
    "unlock\tverb\n"
    "push\tverb\n"
    "pushes\tverb\n"
    "pull\tverb\n"
    "pulls\tverb\n"
    "lift\tverb\n"
    "lifts\tverb\n"
    "drop\tverb\n"
    "drops\tverb\n"
    "dropped\tverb\n"
    "throw\tverb\n"
    "throws\tverb\n"
    "threw\tverb\n"
    "thrown\tverb\n"
    "catch\tverb\n"
    "catches\tverb\n"
    "caught\tverb\n"
    "chase\tverb\n"
    "chases\tverb\n"
    "chased\tverb\n"
    "hit\tverb\n"
    "hits\tverb\n"
    "kick\tverb\n"
    "kicks\tverb\n"
    "touch\tverb\n"
    "touches\tverb\n"
    "break\tverb\n"
    "breaks\tverb\n"
    "broke\tverb\n"
    "broken\tverb\n"
    "fix\tverb\n"
    "fixes\tverb\n"
    "fixed\tverb\n"
    "repair\tverb\n"
    "repairs\tverb\n"
    "build\tverb\n"
    "builds\tverb\n"
    "built\tverb\n"
    "create\tverb\n"
    "creates\tverb\n"
    "created\tverb\n"
    "make\tverb\n"
    "makes\tverb\n"
    "made\tverb\n"
    "design\tverb\n"
    "produce\tverb\n"
    "produces\tverb\n"
    "develop\tverb\n"
    "develops\tverb\n"
    "developed\tverb\n"
    "improve\tverb\n"
    "improves\tverb\n"
    "improved\tverb\n"
    "change\tverb\n"
    "changes\tverb\n"
    "changed\tverb\n"
    "grow\tverb\n"
    "grows\tverb\n"
    "grew\tverb\n"
    "grown\tverb\n"
    "increase\tverb\n"
    "increases\tverb\n"
    "increased\tverb\n"
    "decrease\tverb\n"
    "decreases\tverb\n"
    "reduce\tverb\n"
    "reduces\tverb\n"
    "reduced\tverb\n"
    "expand\tverb\n"
    "expands\tverb\n"
    "shrink\tverb\n"
    "shrinks\tverb\n"
    "cut\tverb\n"
    "cuts\tverb\n"
    "copy\tverb\n"
    "copies\tverb\n"
    "paste\tverb\n"
    "pastes\tverb\n"
    "delete\tverb\n"
    "deletes\tverb\n"
    "remove\tverb\n"
    "removes\tverb\n"
    "add\tverb\n"
    "adds\tverb\n"
    "added\tverb\n"
    "include\tverb\n"
    "includes\tverb\n"
    "included\tverb\n"
    "exclude\tverb\n"
    "excludes\tverb\n"
    "contain\tverb\n"
    "contains\tverb\n"
    "consist\tverb\n"
    "consists\tverb\n"
    "belong\tverb\n"
    "belongs\tverb\n"
    "depend\tverb\n"
    "depends\tverb\n"
    "require\tverb\n"
    "requires\tverb\n"
    "avoid\tverb\n"
    "avoids\tverb\n"
    "want\tverb\n"
    "wants\tverb\n"
    "wanted\tverb\n"
    "wish\tverb\n"
    "wishes\tverb\n"
    "like\tverb\n"
    "likes\tverb\n"
    "liked\tverb\n"
    "enjoy\tverb\n"
    "enjoys\tverb\n"
    "enjoyed\tverb\n"
    "prefer\tverb\n"
    "prefers\tverb\n"
    "feel\tverb\n"
    "feels\tverb\n"
    "felt\tverb\n"
    "seem\tverb\n"
    "seems\tverb\n"
    "seemed\tverb\n"
    "appear\tverb\n"
    "appears\tverb\n"
    "appeared\tverb\n"
    "become\tverb\n"
    "becomes\tverb\n"
    "became\tverb\n"
    "happen\tverb\n"
    "happens\tverb\n"
    "happened\tverb\n"
    "occur\tverb\n"
    "occurs\tverb\n"
    "exist\tverb\n"
    "exists\tverb\n"
    "live\tverb\n"
    "die\tverb\n"
    "dies\tverb\n"
    "died\tverb\n"
    "kill\tverb\n"
    "kills\tverb\n"
    "killed\tverb\n"
    "hurt\tverb\n"
    "hurts\tverb\n"
    "heal\tverb\n"
    "heals\tverb\n"
    "help\tverb\n"
    "helps\tverb\n"
    "helped\tverb\n"
    "support\tverb\n"
    "supports\tverb\n"
    "supported\tverb\n"
    "protect\tverb\n"
    "protects\tverb\n"
    "defend\tverb\n"
    "defends\tverb\n"
    "attack\tverb\n"
    "attacks\tverb\n"
    "fight\tverb\n"
    "fights\tverb\n"
    "fought\tverb\n"
    "argue\tverb\n"
    "argues\tverb\n"
    "argued\tverb\n"
    "agree\tverb\n"
    "agrees\tverb\n"
    "agreed\tverb\n"
    "disagree\tverb\n"
    "disagrees\tverb\n"
    "accept\tverb\n"
    "accepts\tverb\n"
    "accepted\tverb\n"
    "refuse\tverb\n"
    "refuses\tverb\n"
    "reject\tverb\n"
    "rejects\tverb\n"
    "rejected\tverb\n"
    "deny\tverb\n"
    "denies\tverb\n"
    "admit\tverb\n"
    "admits\tverb\n"
    "confirm\tverb\n"
    "confirms\tverb\n"
    "promise\tverb\n"
    "promises\tverb\n"
    "suggest\tverb\n"
    "suggests\tverb\n"
    "suggested\tverb\n"
    "recommend\tverb\n"
    "recommends\tverb\n"
    "advise\tverb\n"
    "advises\tverb\n"
    "warn\tverb\n"
    "warns\tverb\n"
    "warned\tverb\n"
    "remind\tverb\n"
    "reminds\tverb\n"
    "encourage\tverb\n"
    "encourages\tverb\n"
    "inspire\tverb\n"
    "inspires\tverb\n"
    "motivate\tverb\n"
    "motivates\tverb\n"
    "convince\tverb\n"
    "convinces\tverb\n"
    "persuade\tverb\n"
    "persuades\tverb\n"
    "explain\tverb\n"
    "explains\tverb\n"
    "explained\tverb\n"
    "describe\tverb\n"
    "describes\tverb\n"
    "described\tverb\n"
    "define\tverb\n"
    "defines\tverb\n"
    "compare\tverb\n"
    "compares\tverb\n"
    "compared\tverb\n"
    "measure\tverb\n"
    "measures\tverb\n"
    "count\tverb\n"
    "counts\tverb\n"
    "calculate\tverb\n"
    "calculates\tverb\n"
    "estimate\tverb\n"
    "estimates\tverb\n"
    "predict\tverb\n"
    "predicts\tverb\n"
    "analyze\tverb\n"
    "analyzes\tverb\n"
    "test\tverb\n"
    "tests\tverb\n"
    "tested\tverb\n"
    "check\tverb\n"
    "checks\tverb\n"
    "checked\tverb\n"
    "verify\tverb\n"
    "verifies\tverb\n"
    "prove\tverb\n"
    "proves\tverb\n"
    "proved\tverb\n"
    "solve\tverb\n"
    "solves\tverb\n"
    "solved\tverb\n"
    "lead\tverb\n"
    "leads\tverb\n"
    "led\tverb\n"
    "follow\tverb\n"
    "follows\tverb\n"
    "followed\tverb\n"
    "join\tverb\n"
    "joins\tverb\n"
    "joined\tverb\n"
    "connect\tverb\n"
    "connects\tverb\n"
    "connected\tverb\n"
    "attach\tverb\n"
    "attaches\tverb\n"
    "separate\tverb\n"
    "separates\tverb\n"
    "divide\tverb\n"
    "divides\tverb\n"
    "scroll\tverb\n"
    "scrolls\tverb\n"
    "scrolled\tverb\n"
    "swipe\tverb\n"
    "swipes\tverb\n"
    "tap\tverb\n"
    "taps\tverb\n"
    "type\tverb\n"
    "typed\tverb\n"
    "upload\tverb\n"
    "uploads\tverb\n"
    "uploaded\tverb\n"
    "download\tverb\n"
    "downloads\tverb\n"
    "downloaded\tverb\n"
    "record\tverb\n"
    "records\tverb\n"
    "recorded\tverb\n"
    "edit\tverb\n"
    "edits\tverb\n"
    "edited\tverb\n"
    "publish\tverb\n"
    "publishes\tverb\n"
    "published\tverb\n"
    "subscribe\tverb\n"
    "subscribes\tverb\n"
    "unsubscribe\tverb\n"
    "unfollow\tverb\n"
    "block\tverb\n"
    "blocks\tverb\n"
    "blocked\tverb\n"
    "mute\tverb\n"
    "mutes\tverb\n"
    "launch\tverb\n"
    "launches\tverb\n"
    "launched\tverb\n"
    "release\tverb\n"
    "releases\tverb\n"
    "released\tverb\n"
    "announce\tverb\n"
    "announces\tverb\n"
    "announced\tverb\n"
    "reveal\tverb\n"
    "reveals\tverb\n"
    "celebrate\tverb\n"
    "celebrates\tverb\n"
    "congratulate\tverb\n"
    "congratulates\tverb\n"
    "thank\tverb\n"
    "welcome\tverb\n"
    "welcomes\tverb\n"
    "greet\tverb\n"
    "greets\tverb\n"
    "visit\tverb\n"
    "visits\tverb\n"
    "visited\tverb\n"
    "invite\tverb\n"
    "invites\tverb\n"
    "invited\tverb\n"
    "meet\tverb\n"
    "meets\tverb\n"
    "met\tverb\n"
    "introduce\tverb\n"
    "introduces\tverb\n"
    "marry\tverb\n"
    "marries\tverb\n"
    "travel\tverb\n"
    "travels\tverb\n"
    "traveled\tverb\n"
    "drive\tverb\n"
    "drives\tverb\n"
    "drove\tverb\n"
    "driven\tverb\n"
    "ride\tverb\n"
    "rides\tverb\n"
    "rode\tverb\n"
    "ridden\tverb\n"
    "fly\tverb\n"
    "flies\tverb\n"
    "flew\tverb\n"
    "flown\tverb\n"
    "sail\tverb\n"
    "sails\tverb\n"
    "swim\tverb\n"
    "swims\tverb\n"
    "swam\tverb\n"
    "swum\tverb\n"
    "dance\tverb\n"
    "dances\tverb\n"
    "danced\tverb\n"
    "sing\tverb\n"
    "sings\tverb\n"
    "sang\tverb\n"
    "sung\tverb\n"
    "play\tverb\n"
    "plays\tverb\n"
    "played\tverb\n"
    "perform\tverb\n"
    "performs\tverb\n"
    "performed\tverb\n"
    "practice\tverb\n"
    "practices\tverb\n"
    "win\tverb\n"
    "wins\tverb\n"
    "won\tverb\n"
    "lose\tverb\n"
    "loses\tverb\n"
    "lost\tverb\n"
    "compete\tverb\n"
    "competes\tverb\n"
    "laugh\tverb\n"
    "laughs\tverb\n"
    "laughed\tverb\n"
    "smile\tverb\n"
    "smiles\tverb\n"
    "smiled\tverb\n"
    "cry\tverb\n"
    "cries\tverb\n"
    "cried\tverb\n"
    "shout\tverb\n"
    "shouts\tverb\n"
    "yell\tverb\n"
    "yells\tverb\n"
    "whisper\tverb\n"
    "whispers\tverb\n"
    "scream\tverb\n"
    "screams\tverb\n"
    "breathe\tverb\n"
    "breathes\tverb\n"
    "rest\tverb\n"
    "rests\tverb\n"
    "relax\tverb\n"
    "relaxes\tverb\n"
    "exercise\tverb\n"
    "exercises\tverb\n"
    "act\tverb\n"
    "acts\tverb\n"
    "acted\tverb\n"
    "behave\tverb\n"
    "behaves\tverb\n"
    "react\tverb\n"
    "reacts\tverb\n"
    "respond\tverb\n"
    "responds\tverb\n"
    "responded\tverb\n"
    "wear\tverb\n"
    "wears\tverb\n"
    "wore\tverb\n"
    "worn\tverb\n"
    "dress\tverb\n"
    "dresses\tverb\n"
    "wash\tverb\n"
    "washes\tverb\n"
    "washed\tverb\n"
    "brush\tverb\n"
    "brushes\tverb\n"
    "shave\tverb\n"
    "shaves\tverb\n"
    "pour\tverb\n"
    "pours\tverb\n"
    "mix\tverb\n"
    "mixes\tverb\n"
    "stir\tverb\n"
    "stirs\tverb\n"
    "boil\tverb\n"
    "boils\tverb\n"
    "fry\tverb\n"
    "paint\tverb\n"
    "paints\tverb\n"
    "painted\tverb\n"
    "draw\tverb\n"
    "draws\tverb\n"
    "drew\tverb\n"
    "drawn\tverb\n"
    "sketch\tverb\n"
    "sketches\tverb\n"
    "discuss\tverb\n"
    "discusses\tverb\n"
    "discussed\tverb\n"
    "summarize\tverb\n"
    "summarizes\tverb\n"
    "saying\tverb\n"
    "# adjectives\n"
    "good\tadjective\n"
    "better\tadjective\n"
    "best\tadjective\n"
    "bad\tadjective\n"
    "worse\tadjective\n"
    "worst\tadjective\n"
    "great\tadjective\n"
    "terrible\tadjective\n"
    "awful\tadjective\n"
    "amazing\tadjective\n"
    "awesome\tadjective\n"
    "wonderful\tadjective\n"
    "fantastic\tadjective\n"
    "excellent\tadjective\n"
    "perfect\tadjective\n"
    "nice\tadjective\n"
    "fine\tadjective\n"
    "happy\tadjective\n"
    "sad\tadjective\n"
    "angry\tadjective\n"
    "mad\tadjective\n"
    "glad\tadjective\n"
    "excited\tadjective\n"
    "bored\tadjective\n"
    "boring\tadjective\n"
    "interesting\tadjective\n"
    "interested\tadjective\n"
    "fun\tadjective\n"
    "funny\tadjective\n"
    "hilarious\tadjective\n"
    "serious\tadjective\n"
    "silly\tadjective\n"
    "weird\tadjective\n"
    "strange\tadjective\n"
    "odd\tadjective\n"
    "normal\tadjective\n"
    "usual\tadjective\n"
    "unusual\tadjective\n"
    "common\tadjective\n"
    "rare\tadjective\n"
    "special\tadjective\n"
    "unique\tadjective\n"
    "ordinary\tadjective\n"
    "simple\tadjective\n"
    "complex\tadjective\n"
    "complicated\tadjective\n"
    "easy\tadjective\n"
    "hard\tadjective\n"
    "difficult\tadjective\n"
    "tough\tadjective\n"
    "soft\tadjective\n"
    "gentle\tadjective\n"
    "rough\tadjective\n"
    "smooth\tadjective\n"
    "big\tadjective\n"
    "large\tadjective\n"
    "huge\tadjective\n"
    "enormous\tadjective\n"
    "giant\tadjective\n"
    "massive\tadjective\n"
    "small\tadjective\n"
    "little\tadjective\n"
    "tiny\tadjective\n"
    "mini\tadjective\n"
    "short\tadjective\n"
    "long\tadjective\n"
    "tall\tadjective\n"
    "high\tadjective\n"
    "low\tadjective\n"
    "deep\tadjective\n"
    "shallow\tadjective\n"
    "wide\tadjective\n"
    "narrow\tadjective\n"
    "thick\tadjective\n"
    "thin\tadjective\n"
    "heavy\tadjective\n"
    "fat\tadjective\n"
    "slim\tadjective\n"
    "fast\tadjective\n"
    "quick\tadjective\n"
    "slow\tadjective\n"
    "rapid\tadjective\n"
    "swift\tadjective\n"
    "late\tadjective\n"
    "new\tadjective\n"
    "old\tadjective\n"
    "young\tadjective\n"
    "ancient\tadjective\n"
    "modern\tadjective\n"
    "recent\tadjective\n"
    "current\tadjective\n"
    "fresh\tadjective\n"
    "stale\tadjective\n"
    "hot\tadjective\n"
    "cold\tadjective\n"
    "warm\tadjective\n"
    "cool\tadjective\n"
    "freezing\tadjective\n"
    "boiling\tadjective\n"
    "dry\tadjective\n"
    "wet\tadjective\n"
    "humid\tadjective\n"
    "sunny\tadjective\n"
    "rainy\tadjective\n"
    "cloudy\tadjective\n"
    "windy\tadjective\n"
    "snowy\tadjective\n"
    "stormy\tadjective\n"
    "bright\tadjective\n"
    "dark\tadjective\n"
    "dim\tadjective\n"
    "colorful\tadjective\n"
    "pale\tadjective\n"
    "clear\tadjective\n"
    "clean\tadjective\n"
    "dirty\tadjective\n"
    "messy\tadjective\n"
    "neat\tadjective\n"
    "tidy\tadjective\n"
    "beautiful\tadjective\n"
    "pretty\tadjective\n"
    "handsome\tadjective\n"
    "cute\tadjective\n"
    "ugly\tadjective\n"
    "attractive\tadjective\n"
    "gorgeous\tadjective\n"
    "elegant\tadjective\n"
    "stylish\tadjective\n"
    "fashionable\tadjective\n"
    "trendy\tadjective\n"
    "viral\tadjective\n"
    "popular\tadjective\n"
    "famous\tadjective\n"
    "infamous\tadjective\n"
    "anonymous\tadjective\n"
    "public\tadjective\n"
    "private\tadjective\n"
    "personal\tadjective\n"
    "social\tadjective\n"
    "global\tadjective\n"
    "local\tadjective\n"
    "national\tadjective\n"
    "international\tadjective\n"
    "foreign\tadjective\n"
    "domestic\tadjective\n"
    "urban\tadjective\n"
    "rural\tadjective\n"
    "rich\tadjective\n"
    "poor\tadjective\n"
    "wealthy\tadjective\n"
    "expensive\tadjective\n"
    "cheap\tadjective\n"
    "affordable\tadjective\n"
    "free\tadjective\n"
    "valuable\tadjective\n"
    "worthless\tadjective\n"
    "useful\tadjective\n"
    "useless\tadjective\n"
    "helpful\tadjective\n"
    "harmful\tadjective\n"
    "dangerous\tadjective\n"
    "safe\tadjective\n"
    "risky\tadjective\n"
    "secure\tadjective\n"
    "healthy\tadjective\n"
    "sick\tadjective\n"
    "ill\tadjective\n"
    "tired\tadjective\n"
    "exhausted\tadjective\n"
    "energetic\tadjective\n"
    "strong\tadjective\n"
    "weak\tadjective\n"
    "powerful\tadjective\n"
    "powerless\tadjective\n"
    "brave\tadjective\n"
    "fearless\tadjective\n"
    "afraid\tadjective\n"
    "scared\tadjective\n"
    "nervous\tadjective\n"
    "anxious\tadjective\n"
    "calm\tadjective\n"
    "peaceful\tadjective\n"
    "quiet\tadjective\n"
    "loud\tadjective\n"
    "noisy\tadjective\n"
    "silent\tadjective\n"
    "smart\tadjective\n"
    "clever\tadjective\n"
    "intelligent\tadjective\n"
    "brilliant\tadjective\n"
    "wise\tadjective\n"
    "dumb\tadjective\n"
    "stupid\tadjective\n"
    "foolish\tadjective\n"
    "crazy\tadjective\n"
    "insane\tadjective\n"
    "rational\tadjective\n"
    "logical\tadjective\n"
    "emotional\tadjective\n"
    "sensitive\tadjective\n"
    "polite\tadjective\n"
    "rude\tadjective\n"
    "cruel\tadjective\n"
    "mean\tadjective\n"
    "generous\tadjective\n"
    "selfish\tadjective\n"
    "honest\tadjective\n"
    "dishonest\tadjective\n"
    "fair\tadjective\n"
    "unfair\tadjective\n"
    "true\tadjective\n"
    "false\tadjective\n"
    "real\tadjective\n"
    "fake\tadjective\n"
    "genuine\tadjective\n"
    "authentic\tadjective\n"
    "original\tadjective\n"
    "creative\tadjective\n"
    "innovative\tadjective\n"
    "traditional\tadjective\n"
    "classic\tadjective\n"
    "vintage\tadjective\n"
    "digital\tadjective\n"
    "virtual\tadjective\n"
    "physical\tadjective\n"
    "mental\tadjective\n"
    "visual\tadjective\n"
    "verbal\tadjective\n"
    "official\tadjective\n"
    "unofficial\tadjective\n"
    "legal\tadjective\n"
    "illegal\tadjective\n"
    "moral\tadjective\n"
    "ethical\tadjective\n"
    "political\tadjective\n"
    "economic\tadjective\n"
    "financial\tadjective\n"
    "commercial\tadjective\n"
    "industrial\tadjective\n"
    "agricultural\tadjective\n"
    "scientific\tadjective\n"
    "technical\tadjective\n"
    "medical\tadjective\n"
    "educational\tadjective\n"
    "cultural\tadjective\n"
    "historical\tadjective\n"
    "religious\tadjective\n"
    "spiritual\tadjective\n"
    "natural\tadjective\n"
    "artificial\tadjective\n"
    "organic\tadjective\n"
    "synthetic\tadjective\n"
    "raw\tadjective\n"
    "ripe\tadjective\n"
    "rotten\tadjective\n"
    "sweet\tadjective\n"
    "sour\tadjective\n"
    "bitter\tadjective\n"
    "salty\tadjective\n"
    "spicy\tadjective\n"
    "delicious\tadjective\n"
    "tasty\tadjective\n"
    "disgusting\tadjective\n"
    "hungry\tadjective\n"
    "thirsty\tadjective\n"
    "full\tadjective\n"
    "empty\tadjective\n"
    "busy\tadjective\n"
    "available\tadjective\n"
    "ready\tadjective\n"
    "complete\tadjective\n"
    "incomplete\tadjective\n"
    "whole\tadjective\n"
    "partial\tadjective\n"
    "entire\tadjective\n"
    "total\tadjective\n"
    "equal\tadjective\n"
    "unequal\tadjective\n"
    "similar\tadjective\n"
    "different\tadjective\n"
    "identical\tadjective\n"
    "opposite\tadjective\n"
    "positive\tadjective\n"
    "negative\tadjective\n"
    "neutral\tadjective\n"
    "optimistic\tadjective\n"
    "pessimistic\tadjective\n"
    "hopeful\tadjective\n"
    "hopeless\tadjective\n"
    "lucky\tadjective\n"
    "unlucky\tadjective\n"
    "successful\tadjective\n"
    "unsuccessful\tadjective\n"
    "effective\tadjective\n"
    "ineffective\tadjective\n"
    "efficient\tadjective\n"
    "inefficient\tadjective\n"
    "productive\tadjective\n"
    "lazy\tadjective\n"
    "active\tadjective\n"
    "passive\tadjective\n"
    "awake\tadjective\n"
    "asleep\tadjective\n"
    "alive\tadjective\n"
    "dead\tadjective\n"
    "extinct\tadjective\n"
    "wild\tadjective\n"
    "tame\tadjective\n"
    "right\tadjective\n"
    "wrong\tadjective\n"
    "loyal\tadjective\n"
    "friendly\tadjective\n"
    "unfriendly\tadjective\n"
    "hostile\tadjective\n"
    "welcoming\tadjective\n"
    "distant\tadjective\n"
    "sure\tadjective\n"
    "proud\tadjective\n"
    "ashamed\tadjective\n"
    "jealous\tadjective\n"
    "curious\tadjective\n"
    "confident\tadjective\n"
    "confused\tadjective\n"
    "surprised\tadjective\n"
    "shocked\tadjective\n"
    "impressed\tadjective\n"
    "disappointed\tadjective\n"
    "satisfied\tadjective\n"
    "grateful\tadjective\n"
    "thankful\tadjective\n"
    "honored\tadjective\n"
    "blessed\tadjective\n"
    "overrated\tadjective\n"
    "underrated\tadjective\n"
    "informal\tadjective\n"
    "formal\tadjective\n"
    "casual\tadjective\n"
    "latest\tadjective\n"
    "main\tadjective\n"
    "major\tadjective\n"
    "minor\tadjective\n"
    "important\tadjective\n"
    "unimportant\tadjective\n"
    "relevant\tadjective\n"
    "irrelevant\tadjective\n"
    "necessary\tadjective\n"
    "unnecessary\tadjective\n"
    "possible\tadjective\n"
    "impossible\tadjective\n"
    "likely\tadjective\n"
    "unlikely\tadjective\n";

const char* const kSuffixTsv =
    "# order = priority among equal lengths; resolution is longest-first\n"
    "ating\tverb\n"
    "izing\tverb\n"
    "tion\tnoun\n"
    "sion\tnoun\n"
    "ment\tnoun\n"
    "ness\tnoun\n"
    "ship\tnoun\n"
    "hood\tnoun\n"
    "ance\tnoun\n"
    "ence\tnoun\n"
    "ical\tadjective\n"
    "less\tadjective\n"
    "able\tadjective\n"
    "ible\tadjective\n"
    "ity\tnoun\n"
    "ism\tnoun\n"
    "ist\tnoun\n"
    "ure\tnoun\n"
    "ize\tverb\n"
    "ise\tverb\n"
    "ify\tverb\n"
    "ing\tverb\n"
    "ous\tadjective\n"
    "ful\tadjective\n"
    "ive\tadjective\n"
    "ish\tadjective\n"
    "ary\tadjective\n"
    "ed\tverb\n"
    "ic\tadjective\n"
    "al\tadjective\n"
    "ly\tadverb\n";

}  // namespace

std::string_view bundled_lexicon_tsv() { return kLexiconTsv; }
std::string_view bundled_suffix_tsv() { return kSuffixTsv; }

}  // namespace maskdistill::analyzers
