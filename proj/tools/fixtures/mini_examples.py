"""Hand-written question/query pairs of the mini corpus."""

TRAIN = [
    ("concert_singer", "How many singers do we have?",
     "SELECT count(*) FROM singer"),
    ("concert_singer", "Show name, country, age for all singers ordered by age from the oldest to the youngest.",
     "SELECT name , country , age FROM singer ORDER BY age DESC"),
    ("concert_singer", "What is the average, minimum, and maximum age of all singers from France?",
     "SELECT avg(age) , min(age) , max(age) FROM singer WHERE country = 'France'"),
    ("concert_singer", "Show the name and the release year of the song by the youngest singer.",
     "SELECT song_name , song_release_year FROM singer ORDER BY age LIMIT 1"),
    ("concert_singer", "What are all distinct countries where singers above age 20 are from?",
     "SELECT DISTINCT country FROM singer WHERE age > 20"),
    ("concert_singer", "Show all countries and the number of singers in each country.",
     "SELECT country , count(*) FROM singer GROUP BY country"),
    ("concert_singer", "List all song names by singers above the average age.",
     "SELECT song_name FROM singer WHERE age > (SELECT avg(age) FROM singer)"),
    ("concert_singer", "Show location and name for all stadiums with a capacity between 5000 and 10000.",
     "SELECT location , name FROM stadium WHERE capacity BETWEEN 5000 AND 10000"),
    ("concert_singer", "Show the stadium name and the number of concerts in each stadium.",
     "SELECT T2.name , count(*) FROM concert AS T1 JOIN stadium AS T2 ON T1.stadium_id = T2.stadium_id GROUP BY T1.stadium_id"),
    ("concert_singer", "Show the stadium name and capacity with most number of concerts in year 2014 or after.",
     "SELECT T2.name , T2.capacity FROM concert AS T1 JOIN stadium AS T2 ON T1.stadium_id = T2.stadium_id WHERE T1.year >= 2014 GROUP BY T2.stadium_id ORDER BY count(*) DESC LIMIT 1"),
    ("concert_singer", "Show the years in which at least 2 concerts were held.",
     "SELECT year FROM concert GROUP BY year HAVING count(*) >= 2"),
    ("concert_singer", "Show names for all stadiums except for stadiums having a concert in year 2014.",
     "SELECT name FROM stadium EXCEPT SELECT T2.name FROM concert AS T1 JOIN stadium AS T2 ON T1.stadium_id = T2.stadium_id WHERE T1.year = 2014"),
    ("concert_singer", "Show countries where a singer above age 40 and a singer below 30 are from.",
     "SELECT country FROM singer WHERE age > 40 INTERSECT SELECT country FROM singer WHERE age < 30"),
    ("concert_singer", "What are the names of the singers who performed in a concert in 2014?",
     "SELECT T2.name FROM singer_in_concert AS T1 JOIN singer AS T2 ON T1.singer_id = T2.singer_id JOIN concert AS T3 ON T1.concert_id = T3.concert_id WHERE T3.year = 2014"),
    ("world_1", "What is the total population and average area of countries in the continent of North America whose area is bigger than 3000?",
     "SELECT sum(population) , avg(surfacearea) FROM country WHERE continent = 'North America' AND surfacearea > 3000"),
    ("world_1", "What are the average GNP and total population in all nations whose government is US territory?",
     "SELECT avg(GNP) , sum(population) FROM country WHERE GovernmentForm = 'US Territory'"),
    ("world_1", "Which language is spoken by the largest number of countries?",
     "SELECT LANGUAGE FROM countrylanguage GROUP BY LANGUAGE ORDER BY count(*) DESC LIMIT 1"),
    ("world_1", "Give the names of countries that are in Europe and have a population equal to 80000.",
     "SELECT Name FROM country WHERE continent = 'Europe' AND Population = '80000'"),
    ("world_1", "Which regions speak Dutch or English?",
     "SELECT DISTINCT T1.Region FROM country AS T1 JOIN countrylanguage AS T2 ON T1.Code = T2.CountryCode WHERE T2.Language = 'English' OR T2.Language = 'Dutch'"),
    ("world_1", "Return the names of the 3 most populated countries.",
     "SELECT Name FROM country ORDER BY Population DESC LIMIT 3"),
    ("world_1", "What are the names of nations where both English and French are official languages?",
     "SELECT T1.Name FROM country AS T1 JOIN countrylanguage AS T2 ON T1.Code = T2.CountryCode WHERE T2.Language = 'English' AND T2.IsOfficial = 'T' INTERSECT SELECT T1.Name FROM country AS T1 JOIN countrylanguage AS T2 ON T1.Code = T2.CountryCode WHERE T2.Language = 'French' AND T2.IsOfficial = 'T'"),
    ("world_1", "Which cities are in European countries where English is not the official language?",
     "SELECT DISTINCT T2.Name FROM country AS T1 JOIN city AS T2 ON T2.CountryCode = T1.Code WHERE T1.Continent = 'Europe' AND T1.Name NOT IN (SELECT T3.Name FROM country AS T3 JOIN countrylanguage AS T4 ON T3.Code = T4.CountryCode WHERE T4.IsOfficial = 'T' AND T4.Language = 'English')"),
    ("world_1", "How many countries have a republic as their form of government?",
     "SELECT count(*) FROM country WHERE GovernmentForm = 'Republic'"),
    ("world_1", "Which continents have an average life expectancy below 72 for countries with more than one language?",
     "SELECT Continent , avg(LifeExpectancy) FROM country GROUP BY Continent HAVING avg(LifeExpectancy) < 72"),
    ("car_1", "What is the model of the car with the smallest amount of horsepower?",
     "SELECT T1.Model FROM CAR_NAMES AS T1 JOIN CARS_DATA AS T2 ON T1.MakeId = T2.Id ORDER BY T2.horsepower ASC LIMIT 1"),
    ("car_1", "How many car makers are there in each continent?",
     "SELECT T1.Continent , count(*) FROM CONTINENTS AS T1 JOIN COUNTRIES AS T2 ON T1.ContId = T2.continent JOIN car_makers AS T3 ON T2.CountryId = T3.Country GROUP BY T1.Continent"),
    ("car_1", "What is the average weight of cars each year?",
     "SELECT avg(Weight) , YEAR FROM CARS_DATA GROUP BY YEAR"),
    ("car_1", "Which models are lighter than 3500 but not built by Ford Motor Company?",
     "SELECT DISTINCT T1.model FROM MODEL_LIST AS T1 JOIN CAR_NAMES AS T2 ON T1.Model = T2.Model JOIN CARS_DATA AS T3 ON T2.MakeId = T3.Id JOIN CAR_MAKERS AS T4 ON T1.Maker = T4.Id WHERE T3.weight < 3500 AND T4.FullName != 'Ford Motor Company'"),
    ("car_1", "What is the maximum accelerate for different number of cylinders?",
     "SELECT max(Accelerate) , Cylinders FROM CARS_DATA GROUP BY Cylinders"),
    ("car_1", "How many cars have more than 4 cylinders?",
     "SELECT count(*) FROM CARS_DATA WHERE Cylinders > 4"),
    ("car_1", "Which countries have either more than 3 car makers or produce the fiat model?",
     "SELECT T1.countryId , T1.CountryName FROM Countries AS T1 JOIN CAR_MAKERS AS T2 ON T1.CountryId = T2.Country GROUP BY T1.countryId HAVING count(*) > 3 UNION SELECT T1.countryId , T1.CountryName FROM Countries AS T1 JOIN CAR_MAKERS AS T2 ON T1.CountryId = T2.Country JOIN MODEL_LIST AS T3 ON T2.Id = T3.Maker WHERE T3.Model = 'fiat'"),
    ("cre_Doc_Template_Mgt", "How many templates do we have?",
     "SELECT count(*) FROM Templates"),
    ("cre_Doc_Template_Mgt", "Show all template type codes and the number of templates per type.",
     "SELECT template_type_code , count(*) FROM Templates GROUP BY template_type_code"),
    ("cre_Doc_Template_Mgt", "What are the ids of templates with version number later than 5 or type code PP?",
     "SELECT template_id FROM Templates WHERE version_number > 5 OR template_type_code = 'PP'"),
    ("cre_Doc_Template_Mgt", "Show all document ids with at least two paragraphs.",
     "SELECT document_id FROM Paragraphs GROUP BY document_id HAVING count(*) >= 2"),
    ("cre_Doc_Template_Mgt", "List the names of documents whose description mentions the word report.",
     "SELECT document_name FROM Documents WHERE document_description LIKE '%report%'"),
    ("dog_kennels", "How many dogs have not gone through any treatment?",
     "SELECT count(*) FROM Dogs WHERE dog_id NOT IN (SELECT dog_id FROM Treatments)"),
    ("dog_kennels", "List the first name of owners who live in Virginia together with the names of their dogs.",
     "SELECT T1.first_name , T2.name FROM Owners AS T1 JOIN Dogs AS T2 ON T1.owner_id = T2.owner_id WHERE T1.state = 'Virginia'"),
    ("dog_kennels", "Which breed has the most dogs?",
     "SELECT T1.breed_name FROM Breeds AS T1 JOIN Dogs AS T2 ON T1.breed_code = T2.breed_code GROUP BY T1.breed_name ORDER BY count(*) DESC LIMIT 1"),
    ("dog_kennels", "What is the average age of the dogs that have gone through a treatment?",
     "SELECT avg(age) FROM Dogs WHERE dog_id IN (SELECT dog_id FROM Treatments)"),
]

DEV = [
    ("concert_singer", "What is the name and capacity of the stadium with the highest average attendance?",
     "SELECT name , capacity FROM stadium ORDER BY average DESC LIMIT 1"),
    ("concert_singer", "How many concerts are there in year 2014 or 2015?",
     "SELECT count(*) FROM concert WHERE YEAR = 2014 OR YEAR = 2015"),
    ("world_1", "What is the total surface area of the countries in the Caribbean region?",
     "SELECT sum(SurfaceArea) FROM country WHERE Region = 'Caribbean'"),
    ("world_1", "Which countries have no language recorded?",
     "SELECT Name FROM country EXCEPT SELECT T1.Name FROM country AS T1 JOIN countrylanguage AS T2 ON T1.Code = T2.CountryCode"),
    ("car_1", "Which car maker produces the most models?",
     "SELECT T1.FullName , T1.Id FROM CAR_MAKERS AS T1 JOIN MODEL_LIST AS T2 ON T1.Id = T2.Maker GROUP BY T1.Id ORDER BY count(*) DESC LIMIT 1"),
    ("car_1", "What is the number of cars with a greater accelerate than the one with the most horsepower?",
     "SELECT COUNT(*) FROM CARS_DATA WHERE Accelerate > (SELECT Accelerate FROM CARS_DATA ORDER BY Horsepower DESC LIMIT 1)"),
    ("cre_Doc_Template_Mgt", "Return the type code of the template type with the most templates.",
     "SELECT template_type_code FROM Templates GROUP BY template_type_code ORDER BY count(*) DESC LIMIT 1"),
    ("cre_Doc_Template_Mgt", "What are the names of documents that use templates of type code BK?",
     "SELECT T2.document_name FROM Templates AS T1 JOIN Documents AS T2 ON T1.template_id = T2.template_id WHERE T1.template_type_code = 'BK'"),
    ("dog_kennels", "What are the first names of professionals who have done treatments costing more than the average?",
     "SELECT DISTINCT T1.first_name FROM Professionals AS T1 JOIN Treatments AS T2 ON T1.professional_id = T2.professional_id WHERE cost_of_treatment > (SELECT avg(cost_of_treatment) FROM Treatments)"),
    ("dog_kennels", "List the names of dogs ordered by age, youngest first.",
     "SELECT name FROM Dogs ORDER BY age"),
]

# Multi-turn interactions (database, [(utterance, query), ...]).
SPARC_TRAIN = [
    ("concert_singer", [
        ("Show all singers.", "SELECT name FROM singer"),
        ("Which of them are from France?", "SELECT name FROM singer WHERE country = 'France'"),
        ("Order them by age.", "SELECT name FROM singer WHERE country = 'France' ORDER BY age"),
    ]),
    ("concert_singer", [
        ("List all stadiums.", "SELECT name FROM stadium"),
        ("How many concerts took place in each?",
         "SELECT T2.name , count(*) FROM concert AS T1 JOIN stadium AS T2 ON T1.stadium_id = T2.stadium_id GROUP BY T1.stadium_id"),
        ("Only keep those with more than one concert.",
         "SELECT T2.name , count(*) FROM concert AS T1 JOIN stadium AS T2 ON T1.stadium_id = T2.stadium_id GROUP BY T1.stadium_id HAVING count(*) > 1"),
    ]),
    ("dog_kennels", [
        ("Show the names of all dogs.", "SELECT name FROM Dogs"),
        ("What are their ages?", "SELECT name , age FROM Dogs"),
        ("Which one is the oldest?", "SELECT name FROM Dogs ORDER BY age DESC LIMIT 1"),
    ]),
    ("dog_kennels", [
        ("How many treatments are recorded?", "SELECT count(*) FROM Treatments"),
        ("What is their total cost?", "SELECT sum(cost_of_treatment) FROM Treatments"),
        ("And the average cost?", "SELECT avg(cost_of_treatment) FROM Treatments"),
    ]),
]

SPARC_DEV = [
    ("concert_singer", [
        ("Show all concerts.", "SELECT concert_name FROM concert"),
        ("Which were held in 2014?", "SELECT concert_name FROM concert WHERE year = 2014"),
        ("How many are there?", "SELECT count(*) FROM concert WHERE year = 2014"),
    ]),
    ("dog_kennels", [
        ("List all owners.", "SELECT first_name , last_name FROM Owners"),
        ("Who lives in Virginia?", "SELECT first_name , last_name FROM Owners WHERE state = 'Virginia'"),
        ("How many dogs do they own?",
         "SELECT count(*) FROM Owners AS T1 JOIN Dogs AS T2 ON T1.owner_id = T2.owner_id WHERE T1.state = 'Virginia'"),
    ]),
]
